#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the simplex, Fourier-Motzkin or the blow-up interpreter.

#include "lct/lct.hpp"
#include "lct/polytope.hpp"
#include "lct/rational.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using lct::Rational;
using lct::Vector;

// Plain Gaussian elimination; nullopt when the square system is singular.
inline std::optional<Vector> solve(std::vector<Vector> a, Vector b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    Vector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

inline bool satisfies(const lct::LinIneqSystem& sys, const Vector& x) {
    for (const auto& c : sys.constraints()) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
        if (c.rel == lct::Relation::GE ? lhs < c.rhs : lhs != c.rhs) return false;
    }
    return true;
}

// Every basic feasible point: intersections of `dimension` constraints taken
// as equalities that satisfy the whole system.
inline std::vector<Vector> vertices(const lct::LinIneqSystem& sys) {
    const std::size_t n = sys.dimension(), m = sys.size();
    std::vector<Vector> out;
    if (n == 0 || m < n) return out;
    std::vector<char> pick(m, 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(n), pick.end(), 1);
    do {
        std::vector<Vector> a;
        Vector b;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i]) {
                a.push_back(sys.constraints()[i].coeffs);
                b.push_back(sys.constraints()[i].rhs);
            }
        auto x = solve(a, b);
        if (x && satisfies(sys, *x) && std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

// Maximum of c.x over the vertices; only meaningful for bounded pointed polytopes.
inline std::optional<Rational> vertex_maximum(const lct::LinIneqSystem& sys, const Vector& c) {
    std::optional<Rational> best;
    for (const auto& v : vertices(sys)) {
        Rational val = 0;
        for (std::size_t j = 0; j < c.size(); ++j) val += c[j] * v[j];
        if (!best || val > *best) best = val;
    }
    return best;
}

// d = sum over divisors through the center + sum coefficient * multiplicity,
// k = 1 + sum of discrepancies through the center, evaluated step by step in
// the given order; returns min (1 + k)/d over everything with d > 0.
inline std::optional<Rational> germ_lct_in_order(const std::vector<lct::Branch>& branches,
                                                 const lct::BlowupProgram& prog,
                                                 const std::vector<std::size_t>& order) {
    std::vector<Rational> d(prog.steps.size()), k(prog.steps.size());
    std::vector<char> done(prog.steps.size(), 0);
    auto index_of = [&](const std::string& id) {
        for (std::size_t i = 0; i < prog.steps.size(); ++i)
            if (lct::detail::step_id(prog, i) == id) return i;
        return prog.steps.size();
    };
    std::optional<Rational> best;
    for (std::size_t s : order) {
        const auto& step = prog.steps[s];
        Rational ds = 0, ks = 1;
        for (const auto& e : step.exceptionals) {
            std::size_t j = index_of(e);
            if (j == prog.steps.size() || !done[j]) return std::nullopt;
            ds += d[j];
            ks += k[j];
        }
        for (const auto& bi : step.branches)
            for (const auto& b : branches)
                if (b.id == bi.branch) ds += b.coefficient * bi.multiplicity;
        d[s] = ds;
        k[s] = ks;
        done[s] = 1;
        if (ds > 0) {
            Rational v = (1 + ks) / ds;
            if (!best || v < *best) best = v;
        }
    }
    for (const auto& b : branches)
        if (b.coefficient > 0) {
            Rational v = 1 / b.coefficient;
            if (!best || v < *best) best = v;
        }
    return best;
}

// Every reordering of the steps that keeps each center after the divisors it
// lies on, with the program's own step ids preserved.
inline std::vector<lct::BlowupProgram> valid_reorderings(const lct::BlowupProgram& prog) {
    std::vector<lct::BlowupProgram> out;
    std::vector<std::size_t> perm(prog.steps.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::size_t> pos(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
        bool ok = true;
        for (std::size_t i = 0; i < prog.steps.size() && ok; ++i)
            for (const auto& e : prog.steps[i].exceptionals)
                for (std::size_t j = 0; j < prog.steps.size(); ++j)
                    if (lct::detail::step_id(prog, j) == e && pos[j] > pos[i]) ok = false;
        if (!ok) continue;
        lct::BlowupProgram p;
        for (std::size_t i : perm) {
            p.steps.push_back(prog.steps[i]);
            p.steps.back().id = lct::detail::step_id(prog, i);
        }
        out.push_back(std::move(p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Fixed-seed rational sampler. Uses raw engine output so the sequence is the
// same on every standard library.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    // Uniform over fractions p/q in [lo, hi] with 1 <= q <= max_den.
    Rational pick(long long lo, long long hi, long long max_den = 12) {
        long long q = 1 + static_cast<long long>(rng_() % static_cast<std::uint64_t>(max_den));
        long long span = (hi - lo) * q;
        long long p = lo * q + static_cast<long long>(rng_() % static_cast<std::uint64_t>(span + 1));
        return lct::frac(p, q);
    }

    long long integer(long long lo, long long hi) {
        return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
