#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lct {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

inline Rational frac(long long p, long long q = 1) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(Integer(p), Integer(q));
}

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Always "p/q" with q > 0 and gcd(p, q) = 1, including integers ("3/1").
inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("malformed rational");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed rational");
        if (s[0] == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer p = parse_int(trim(text.substr(0, slash)));
    std::string_view den = trim(text.substr(slash + 1));
    if (!den.empty() && den[0] == '-') throw std::invalid_argument("negative denominator");
    Integer q = parse_int(den);
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
}

inline Vector to_rationals(const std::vector<int>& v) {
    Vector out;
    out.reserve(v.size());
    for (int x : v) out.emplace_back(x);
    return out;
}

inline Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

// Gauss-Jordan solve of a square system; throws if singular.
inline Vector solve_linear(Matrix a, Vector b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_linear: matrix not square");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("solve_linear: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rational inv = 1 / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

inline Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

}  // namespace lct
