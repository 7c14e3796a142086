#pragma once

#include "lct/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lct {

enum class DynkinKind { A, D, E };

inline char kind_letter(DynkinKind k) {
    switch (k) {
        case DynkinKind::A: return 'A';
        case DynkinKind::D: return 'D';
        case DynkinKind::E: return 'E';
    }
    return '?';
}

// A Du Val singularity type. Ranks are limited to what occurs on degree-1
// del Pezzo surfaces: A1..A8, D4..D8, E6..E8.
struct DynkinType {
    DynkinKind kind = DynkinKind::A;
    int rank = 1;

    static DynkinType make(DynkinKind kind, int rank) {
        bool ok = false;
        switch (kind) {
            case DynkinKind::A: ok = rank >= 1 && rank <= 8; break;
            case DynkinKind::D: ok = rank >= 4 && rank <= 8; break;
            case DynkinKind::E: ok = rank >= 6 && rank <= 8; break;
        }
        if (!ok)
            throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) +
                                        " for kind " + kind_letter(kind));
        return DynkinType{kind, rank};
    }

    static DynkinType parse(const std::string& text) {
        if (text.size() < 2) throw std::invalid_argument("malformed Dynkin type '" + text + "'");
        DynkinKind kind;
        switch (text[0]) {
            case 'A': kind = DynkinKind::A; break;
            case 'D': kind = DynkinKind::D; break;
            case 'E': kind = DynkinKind::E; break;
            default: throw std::invalid_argument("unknown Dynkin kind in '" + text + "'");
        }
        for (std::size_t i = 1; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9')
                throw std::invalid_argument("malformed Dynkin type '" + text + "'");
        return make(kind, std::stoi(text.substr(1)));
    }

    std::string name() const { return kind_letter(kind) + std::to_string(rank); }

    auto operator<=>(const DynkinType&) const = default;
};

// Edges of the dual graph, 0-based. A: chain. D: E1-E3, E2-E3, E3-E4-...-Em.
// E: E1-E2-E3, E3-E4, E3-E5-...-Em.
inline std::vector<std::pair<int, int>> dynkin_edges(DynkinType t) {
    std::vector<std::pair<int, int>> edges;
    const int m = t.rank;
    switch (t.kind) {
        case DynkinKind::A:
            for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
            break;
        case DynkinKind::D:
            edges.emplace_back(0, 2);
            edges.emplace_back(1, 2);
            for (int i = 2; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
            break;
        case DynkinKind::E:
            edges.emplace_back(0, 1);
            edges.emplace_back(1, 2);
            edges.emplace_back(2, 3);
            edges.emplace_back(2, 4);
            for (int i = 4; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
            break;
    }
    return edges;
}

class IntersectionMatrix {
public:
    explicit IntersectionMatrix(DynkinType t) : type_(t), n_(t.rank), entries_(n_ * n_, 0) {
        for (int i = 0; i < n_; ++i) set(i, i, -2);
        for (auto [i, j] : dynkin_edges(t)) {
            set(i, j, 1);
            set(j, i, 1);
        }
    }

    DynkinType type() const { return type_; }
    int size() const { return n_; }

    // 1-based, matching E_1..E_m.
    int entry(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("intersection matrix index");
        return at(i - 1, j - 1);
    }
    int at(int i, int j) const { return entries_[i * n_ + j]; }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
        return out;
    }

    Matrix to_rational() const {
        Matrix out(n_, Vector(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
        return out;
    }

    std::vector<Rational> leading_minors() const {
        Matrix full = to_rational();
        std::vector<Rational> out;
        for (int k = 1; k <= n_; ++k) {
            Matrix sub(k, Vector(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = full[i][j];
            out.push_back(determinant(sub));
        }
        return out;
    }

    bool negative_definite() const {
        auto minors = leading_minors();
        for (std::size_t k = 0; k < minors.size(); ++k) {
            bool odd = (k % 2) == 0;  // order k+1
            if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
        }
        return true;
    }

private:
    void set(int i, int j, int v) { entries_[i * n_ + j] = v; }

    DynkinType type_;
    int n_;
    std::vector<int> entries_;
};

inline IntersectionMatrix intersection_matrix(DynkinType t) {
    return IntersectionMatrix(DynkinType::make(t.kind, t.rank));
}

// A curve on the singular surface, described by the data needed on the
// minimal resolution: -K.L, the strict self-intersection and L-bar.E_i.
struct CurveClass {
    std::string name;
    Rational anticanonical_degree = 1;
    Rational self_intersection_strict = -1;
    std::vector<int> exc_intersections;
};

struct PullbackCoefficients {
    DynkinType type;
    Vector coeffs;
};

// Solves M n = -b so that (L-bar + sum n_i E_i).E_j = 0 for every j.
inline PullbackCoefficients pullback_coefficients(DynkinType t, const std::vector<int>& b) {
    IntersectionMatrix m = intersection_matrix(t);
    if (static_cast<int>(b.size()) != m.size())
        throw std::invalid_argument("incidence vector has length " + std::to_string(b.size()) +
                                    ", expected " + std::to_string(m.size()));
    Vector rhs;
    for (int x : b) {
        if (x < 0) throw std::invalid_argument("incidence entries must be non-negative");
        rhs.emplace_back(-x);
    }
    return PullbackCoefficients{t, solve_linear(m.to_rational(), rhs)};
}

inline PullbackCoefficients pullback_coefficients(const CurveClass& c, DynkinType t) {
    return pullback_coefficients(t, c.exc_intersections);
}

// pi^*L1 . pi^*L2 = L1-bar.L2-bar + sum_j n1_j (L2-bar . E_j).
inline Rational intersection_number(const CurveClass& l1, const PullbackCoefficients& n1,
                                    const CurveClass& l2, const Rational& strict_product) {
    const std::size_t m = n1.coeffs.size();
    if (l1.exc_intersections.size() != m || l2.exc_intersections.size() != m)
        throw std::invalid_argument("intersection_number: rank mismatch");
    Rational total = strict_product;
    for (std::size_t j = 0; j < m; ++j) total += n1.coeffs[j] * l2.exc_intersections[j];
    return total;
}

// The diagram automorphism E_i -> E_{m+1-i} of a chain.
inline PullbackCoefficients involution_reverse(const PullbackCoefficients& n) {
    if (n.type.kind != DynkinKind::A)
        throw std::invalid_argument("involution_reverse is defined for kind A only");
    return PullbackCoefficients{n.type, Vector(n.coeffs.rbegin(), n.coeffs.rend())};
}

inline bool cartier_check(const std::vector<PullbackCoefficients>& vectors) {
    if (vectors.empty()) return true;
    const std::size_t m = vectors.front().coeffs.size();
    Vector sum(m, Rational(0));
    for (const auto& v : vectors) {
        if (v.coeffs.size() != m) throw std::invalid_argument("cartier_check: length mismatch");
        for (std::size_t i = 0; i < m; ++i) sum[i] += v.coeffs[i];
    }
    for (const auto& x : sum)
        if (!is_integer(x)) return false;
    return true;
}

// Residual form: sum(vectors) - multiple * reference must be integral.
inline bool cartier_check(const std::vector<PullbackCoefficients>& vectors,
                          const PullbackCoefficients& reference, const Rational& multiple) {
    std::vector<PullbackCoefficients> all = vectors;
    PullbackCoefficients neg = reference;
    for (auto& x : neg.coeffs) x *= -multiple;
    all.push_back(neg);
    return cartier_check(all);
}

// Index (1-based) of the exceptional curve met by the general anticanonical
// curve C through the point.
inline std::vector<int> anticanonical_incidence(DynkinType t) {
    std::vector<int> b(t.rank, 0);
    switch (t.kind) {
        case DynkinKind::A:
            b.front() += 1;
            b.back() += 1;
            break;
        case DynkinKind::D: b[t.rank - 2] = 1; break;
        case DynkinKind::E:
            b[t.rank == 6 ? 3 : t.rank == 7 ? 0 : 7] = 1;
            break;
    }
    return b;
}

inline CurveClass anticanonical_curve(DynkinType t) {
    return CurveClass{"C", 1, -1, anticanonical_incidence(t)};
}

// Curve L_k with -K.L = 1, L-bar^2 = -1 meeting only E_k, once.
inline CurveClass unit_curve(DynkinType t, int k, std::string name) {
    if (k < 1 || k > t.rank) throw std::invalid_argument("unit_curve: index out of range");
    std::vector<int> b(t.rank, 0);
    b[k - 1] = 1;
    return CurveClass{std::move(name), 1, -1, std::move(b)};
}

}  // namespace lct
