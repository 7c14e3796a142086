#pragma once

#include "lct/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lct {

enum class Relation { GE, EQ };

// coeffs . x  (>= | =)  rhs
struct Constraint {
    Vector coeffs;
    Relation rel = Relation::GE;
    Rational rhs = 0;
    std::string label;
};

using Terms = std::vector<std::pair<std::string, Rational>>;

class LinIneqSystem {
public:
    LinIneqSystem() = default;
    explicit LinIneqSystem(std::vector<std::string> variables) : variables_(std::move(variables)) {
        std::set<std::string> seen;
        for (const auto& v : variables_)
            if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
    }

    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    std::size_t dimension() const { return variables_.size(); }
    std::size_t size() const { return constraints_.size(); }

    bool has_variable(const std::string& name) const {
        return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
    }

    std::size_t index_of(const std::string& name) const {
        auto it = std::find(variables_.begin(), variables_.end(), name);
        if (it == variables_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - variables_.begin());
    }

    void add(Constraint c) {
        if (c.coeffs.size() != variables_.size())
            throw std::invalid_argument("constraint has " + std::to_string(c.coeffs.size()) +
                                        " coefficients, system has " +
                                        std::to_string(variables_.size()) + " variables");
        constraints_.push_back(std::move(c));
    }

    void add_ge(Vector coeffs, Rational rhs, std::string label = {}) {
        add(Constraint{std::move(coeffs), Relation::GE, std::move(rhs), std::move(label)});
    }
    void add_eq(Vector coeffs, Rational rhs, std::string label = {}) {
        add(Constraint{std::move(coeffs), Relation::EQ, std::move(rhs), std::move(label)});
    }

    Vector row(const Terms& terms) const {
        Vector r(variables_.size(), Rational(0));
        for (const auto& [name, c] : terms) r[index_of(name)] += c;
        return r;
    }

    void ge(const Terms& terms, Rational rhs, std::string label = {}) {
        add_ge(row(terms), std::move(rhs), std::move(label));
    }
    void le(const Terms& terms, Rational rhs, std::string label = {}) {
        Vector r = row(terms);
        for (auto& x : r) x = -x;
        add_ge(std::move(r), -rhs, std::move(label));
    }
    void eq(const Terms& terms, Rational rhs, std::string label = {}) {
        add_eq(row(terms), std::move(rhs), std::move(label));
    }

    // Appends a fresh variable with zero coefficient in every existing constraint.
    void add_variable(const std::string& name) {
        if (has_variable(name)) throw std::invalid_argument("duplicate variable '" + name + "'");
        variables_.push_back(name);
        for (auto& c : constraints_) c.coeffs.emplace_back(0);
    }

    bool satisfied_by(const Vector& x) const {
        if (x.size() != variables_.size()) return false;
        for (const auto& c : constraints_) {
            Rational lhs = dot(c.coeffs, x);
            if (c.rel == Relation::GE ? lhs < c.rhs : lhs != c.rhs) return false;
        }
        return true;
    }

private:
    std::vector<std::string> variables_;
    std::vector<Constraint> constraints_;
};

// Multipliers, one per constraint: non-negative on GE rows, signed on EQ rows.
struct FarkasCertificate {
    Vector multipliers;
};

enum class LPStatus { Optimal, Unbounded, Infeasible };

inline const char* status_name(LPStatus s) {
    switch (s) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Unbounded: return "unbounded";
        case LPStatus::Infeasible: return "infeasible";
    }
    return "?";
}

// For Optimal results `dual` holds multipliers y (GE entries >= 0) with
// sum y_i a_i = -c and sum y_i b_i = -value, which proves c.x <= value.
struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value = 0;
    Vector witness;
    Vector dual;
    std::optional<FarkasCertificate> certificate;

    bool optimal() const { return status == LPStatus::Optimal; }
};

// Scales a multiplier vector by a positive factor to a primitive integer vector.
inline Vector primitive_multipliers(const Vector& v) {
    Integer l = 1, g = 0;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
    for (const auto& x : v) g = boost::multiprecision::gcd(g, numerator(x) * (l / denominator(x)));
    if (g == 0) return v;
    Vector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x * Rational(l) / Rational(g));
    return out;
}

// Independent of any solver: the weighted sum must read 0.x >= c with c > 0.
inline bool verify_infeasibility(const LinIneqSystem& sys, const FarkasCertificate& cert) {
    const auto& cs = sys.constraints();
    if (cert.multipliers.size() != cs.size()) return false;
    Vector combo(sys.dimension(), Rational(0));
    Rational rhs = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const Rational& y = cert.multipliers[i];
        if (cs[i].rel == Relation::GE && y < 0) return false;
        if (y == 0) continue;
        for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += y * cs[i].coeffs[j];
        rhs += y * cs[i].rhs;
    }
    for (const auto& x : combo)
        if (x != 0) return false;
    return rhs > 0;
}

inline bool verify_dual_bound(const LinIneqSystem& sys, const Vector& objective, const Vector& dual,
                              const Rational& bound) {
    const auto& cs = sys.constraints();
    if (dual.size() != cs.size() || objective.size() != sys.dimension()) return false;
    Vector combo = objective;
    Rational rhs = bound;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].rel == Relation::GE && dual[i] < 0) return false;
        if (dual[i] == 0) continue;
        for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += dual[i] * cs[i].coeffs[j];
        rhs += dual[i] * cs[i].rhs;
    }
    for (const auto& x : combo)
        if (x != 0) return false;
    return rhs == 0;
}

// Checks an LPResult against the system without trusting the solver.
inline bool verify_result(const LinIneqSystem& sys, const Vector& objective, const LPResult& r) {
    switch (r.status) {
        case LPStatus::Optimal:
            return sys.satisfied_by(r.witness) && dot(objective, r.witness) == r.value &&
                   verify_dual_bound(sys, objective, r.dual, r.value);
        case LPStatus::Infeasible:
            return r.certificate && verify_infeasibility(sys, *r.certificate);
        case LPStatus::Unbounded:
            return true;
    }
    return false;
}

namespace detail {

// Two-phase dense tableau simplex over z >= 0 with Bland's rule.
// Free variables x are split as p - q and GE rows get a surplus column.
class Simplex {
public:
    Simplex(const LinIneqSystem& sys, const Vector& objective) {
        n_ = sys.dimension();
        const auto& cs = sys.constraints();
        m_ = cs.size();
        // GE rows with rhs <= 0 are negated so their slack starts basic;
        // every other row gets an artificial column.
        sign_.assign(m_, 1);
        std::size_t surplus = 0, artificial = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& c = cs[i];
            if (c.rel == Relation::GE) {
                ++surplus;
                sign_[i] = c.rhs > 0 ? 1 : -1;
                if (sign_[i] > 0) ++artificial;
            } else {
                sign_[i] = c.rhs < 0 ? -1 : 1;
                ++artificial;
            }
        }
        structural_ = 2 * n_ + surplus;
        cols_ = structural_ + artificial;
        full_.assign(m_, Vector(cols_ + 1, Rational(0)));
        initial_basis_.assign(m_, 0);
        std::size_t s = 2 * n_, art = structural_;
        for (std::size_t i = 0; i < m_; ++i) {
            Rational sg = sign_[i];
            for (std::size_t j = 0; j < n_; ++j) {
                full_[i][j] = sg * cs[i].coeffs[j];
                full_[i][n_ + j] = -sg * cs[i].coeffs[j];
            }
            bool slack_basic = false;
            if (cs[i].rel == Relation::GE) {
                full_[i][s] = -sg;
                slack_basic = sign_[i] < 0;
                if (slack_basic) initial_basis_[i] = s;
                ++s;
            }
            if (!slack_basic) {
                full_[i][art] = 1;
                initial_basis_[i] = art++;
            }
            full_[i][cols_] = sg * cs[i].rhs;
        }
        cost_.assign(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) {
            cost_[j] = -objective[j];
            cost_[n_ + j] = objective[j];
        }
    }

    LPResult run() {
        tab_ = full_;
        basis_ = initial_basis_;
        rows_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) rows_[i] = i;

        Vector phase1(cols_, Rational(0));
        for (std::size_t j = structural_; j < cols_; ++j) phase1[j] = 1;
        optimize(phase1, cols_);
        Rational infeas = 0;
        for (std::size_t i = 0; i < tab_.size(); ++i)
            if (basis_[i] >= structural_) infeas += tab_[i][cols_];

        LPResult result;
        if (infeas > 0) {
            Vector y = duals(phase1);
            Vector lambda(m_, Rational(0));
            for (std::size_t i = 0; i < m_; ++i) lambda[i] = Rational(sign_[i]) * y[i];
            result.status = LPStatus::Infeasible;
            result.certificate = FarkasCertificate{primitive_multipliers(lambda)};
            return result;
        }

        drive_out_artificials();
        if (!optimize(cost_, structural_)) {
            result.status = LPStatus::Unbounded;
            return result;
        }

        Vector z(cols_, Rational(0));
        for (std::size_t i = 0; i < tab_.size(); ++i) z[basis_[i]] = tab_[i][cols_];
        result.status = LPStatus::Optimal;
        result.witness.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) result.witness[j] = z[j] - z[n_ + j];
        Rational minval = 0;
        for (std::size_t j = 0; j < cols_; ++j) minval += cost_[j] * z[j];
        result.value = -minval;
        Vector y = duals(cost_);
        result.dual.assign(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) result.dual[i] = Rational(sign_[i]) * y[i];
        return result;
    }

private:
    // Minimises cost over columns [0, allowed). Returns false if unbounded.
    bool optimize(const Vector& cost, std::size_t allowed) {
        std::vector<char> is_basic(cols_, 0);
        for (auto b : basis_) is_basic[b] = 1;
        reduced_ = cost;
        reduced_.emplace_back(0);
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            const Rational cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (tab_[i][j] != 0) reduced_[j] -= cb * tab_[i][j];
        }
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < allowed; ++j)
                if (!is_basic[j] && reduced_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_) return true;

            std::size_t leave = tab_.size();
            Rational best;
            for (std::size_t i = 0; i < tab_.size(); ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][cols_] / tab_[i][enter];
                if (leave == tab_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == tab_.size()) return false;
            is_basic[basis_[leave]] = 0;
            is_basic[enter] = 1;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / tab_[r][c];
        for (auto& x : tab_[r])
            if (x != 0) x *= inv;
        auto eliminate_in = [&](Vector& row) {
            if (row[c] == 0) return;
            Rational f = row[c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (tab_[r][j] != 0) row[j] -= f * tab_[r][j];
        };
        for (std::size_t i = 0; i < tab_.size(); ++i)
            if (i != r) eliminate_in(tab_[i]);
        if (!reduced_.empty()) eliminate_in(reduced_);
        basis_[r] = c;
    }

    // Zero-level artificials left after phase 1 are pivoted out, or their
    // rows are dropped as linearly dependent.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < tab_.size();) {
            if (basis_[i] < structural_) {
                ++i;
                continue;
            }
            std::size_t col = structural_;
            for (std::size_t j = 0; j < structural_; ++j)
                if (tab_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col < structural_) {
                pivot(i, col);
                ++i;
            } else {
                tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    // Solves B^T y = c_B against the original rows; dropped rows get y = 0.
    Vector duals(const Vector& cost) const {
        const std::size_t k = basis_.size();
        Matrix bt(k, Vector(k));
        Vector cb(k);
        for (std::size_t a = 0; a < k; ++a) {
            cb[a] = cost[basis_[a]];
            for (std::size_t b = 0; b < k; ++b) bt[a][b] = full_[rows_[b]][basis_[a]];
        }
        Vector y(m_, Rational(0));
        if (k == 0) return y;
        Vector sol = solve_linear(bt, cb);
        for (std::size_t b = 0; b < k; ++b) y[rows_[b]] = sol[b];
        return y;
    }

    std::size_t n_ = 0, m_ = 0, structural_ = 0, cols_ = 0;
    Matrix full_, tab_;
    std::vector<int> sign_;
    Vector cost_;
    Vector reduced_;
    std::vector<std::size_t> basis_, rows_, initial_basis_;
};

inline LPResult simplex(const LinIneqSystem& sys, const Vector& objective) {
    return Simplex(sys, objective).run();
}

}  // namespace detail

struct MaximizeOptions {
    bool lexicographic_witness = true;
};

// Exact maximum of objective.x. Among optimal points the lexicographically
// smallest witness is returned when it exists.
inline LPResult maximize(const LinIneqSystem& sys, const Vector& objective,
                         MaximizeOptions opts = {}) {
    if (objective.size() != sys.dimension())
        throw std::invalid_argument("objective has wrong length");
    LPResult r = detail::simplex(sys, objective);
    if (r.optimal() && opts.lexicographic_witness) {
        LinIneqSystem face = sys;
        face.add_eq(objective, r.value);
        for (std::size_t i = 0; i < sys.dimension(); ++i) {
            Vector e(sys.dimension(), Rational(0));
            e[i] = -1;
            LPResult step = detail::simplex(face, e);
            if (!step.optimal()) break;
            r.witness = step.witness;
            e[i] = 1;
            face.add_eq(e, -step.value);
        }
    }
    if (!verify_result(sys, objective, r))
        throw std::logic_error("simplex produced an unverifiable result");
    return r;
}

inline LPResult minimize(const LinIneqSystem& sys, const Vector& objective,
                         MaximizeOptions opts = {}) {
    Vector neg = objective;
    for (auto& x : neg) x = -x;
    LPResult r = maximize(sys, neg, opts);
    if (r.optimal()) r.value = -r.value;
    return r;
}

inline std::optional<Vector> feasible_point(const LinIneqSystem& sys) {
    LPResult r = maximize(sys, Vector(sys.dimension(), Rational(0)));
    if (!r.optimal()) return std::nullopt;
    return r.witness;
}

// ---------------------------------------------------------------------------
// Implication

// Certificate for sys => a.x >= b: multipliers over sys plus a final
// multiplier for the negation -a.x > -b. The weighted sum must read
// 0 > c with c >= 0, or 0 >= c with c > 0 when the last multiplier is 0.
struct ImplicationResult {
    bool implied = false;
    std::optional<FarkasCertificate> certificate;
    std::optional<Vector> counterexample;
};

inline bool verify_implication(const LinIneqSystem& sys, const Constraint& ineq,
                               const FarkasCertificate& cert) {
    const auto& cs = sys.constraints();
    if (cert.multipliers.size() != cs.size() + 1 || ineq.coeffs.size() != sys.dimension())
        return false;
    const Rational& mu = cert.multipliers.back();
    if (mu < 0) return false;
    Vector combo(sys.dimension(), Rational(0));
    Rational rhs = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const Rational& y = cert.multipliers[i];
        if (cs[i].rel == Relation::GE && y < 0) return false;
        if (y == 0) continue;
        for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += y * cs[i].coeffs[j];
        rhs += y * cs[i].rhs;
    }
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] -= mu * ineq.coeffs[j];
    rhs -= mu * ineq.rhs;
    for (const auto& x : combo)
        if (x != 0) return false;
    return mu > 0 ? rhs >= 0 : rhs > 0;
}

inline ImplicationResult is_implied(const LinIneqSystem& sys, const Constraint& ineq) {
    if (ineq.coeffs.size() != sys.dimension())
        throw std::invalid_argument("inequality has wrong length");
    if (ineq.rel == Relation::EQ)
        throw std::invalid_argument("is_implied expects an inequality; split equalities into two");
    ImplicationResult out;
    LPResult lo = minimize(sys, ineq.coeffs);
    if (lo.status == LPStatus::Infeasible) {
        Vector m = lo.certificate->multipliers;
        m.emplace_back(0);
        out.implied = true;
        out.certificate = FarkasCertificate{std::move(m)};
    } else if (lo.optimal() && lo.value >= ineq.rhs) {
        // dual proves -a.x <= -min, i.e. a.x >= min >= b.
        Vector m = lo.dual;
        m.emplace_back(1);
        out.implied = true;
        out.certificate = FarkasCertificate{primitive_multipliers(m)};
    } else if (lo.optimal()) {
        out.counterexample = lo.witness;
    } else {
        LinIneqSystem below = sys;
        Vector neg = ineq.coeffs;
        for (auto& x : neg) x = -x;
        below.add_ge(neg, -ineq.rhs + 1);
        out.counterexample = feasible_point(below);
    }
    if (out.implied && !verify_implication(sys, ineq, *out.certificate))
        throw std::logic_error("implication certificate failed verification");
    return out;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace detail {

// Positive rescaling to a primitive integer row; EQ rows also get a
// positive leading coefficient.
inline Constraint normalized(Constraint c) {
    Vector all = c.coeffs;
    all.push_back(c.rhs);
    bool nonzero = std::any_of(all.begin(), all.end(), [](const Rational& x) { return x != 0; });
    if (!nonzero) return c;
    Vector p = primitive_multipliers(all);
    if (c.rel == Relation::EQ) {
        auto lead = std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; });
        if (*lead < 0)
            for (auto& x : p) x = -x;
    }
    c.rhs = p.back();
    p.pop_back();
    c.coeffs = std::move(p);
    return c;
}

inline std::string row_key(const Constraint& c) {
    std::string key = c.rel == Relation::GE ? "G" : "E";
    for (const auto& x : c.coeffs) key += to_string(x) + ",";
    return key;
}

inline bool all_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace detail

// Projects out one variable. Equalities involving it are used for
// substitution; otherwise every lower/upper bound pair is combined.
// Tautologies and duplicate rows are dropped, and among rows with the same
// left side only the strongest is kept.
inline LinIneqSystem eliminate(const LinIneqSystem& sys, const std::string& var) {
    const std::size_t j = sys.index_of(var);
    const auto& cs = sys.constraints();
    std::vector<Constraint> out;

    auto combine = [](const Constraint& a, const Rational& wa, const Constraint& b,
                      const Rational& wb, Relation rel) {
        Constraint c;
        c.rel = rel;
        c.coeffs.resize(a.coeffs.size());
        for (std::size_t k = 0; k < a.coeffs.size(); ++k) c.coeffs[k] = wa * a.coeffs[k] + wb * b.coeffs[k];
        c.rhs = wa * a.rhs + wb * b.rhs;
        return c;
    };

    auto pivot_eq = std::find_if(cs.begin(), cs.end(), [j](const Constraint& c) {
        return c.rel == Relation::EQ && c.coeffs[j] != 0;
    });
    if (pivot_eq != cs.end()) {
        for (auto it = cs.begin(); it != cs.end(); ++it) {
            if (it == pivot_eq) continue;
            if (it->coeffs[j] == 0) {
                out.push_back(*it);
                continue;
            }
            out.push_back(combine(*it, 1, *pivot_eq, -it->coeffs[j] / pivot_eq->coeffs[j], it->rel));
        }
    } else {
        std::vector<const Constraint*> pos, neg;
        for (const auto& c : cs) {
            if (c.coeffs[j] == 0)
                out.push_back(c);
            else if (c.coeffs[j] > 0)
                pos.push_back(&c);
            else
                neg.push_back(&c);
        }
        for (const auto* p : pos)
            for (const auto* n : neg)
                out.push_back(combine(*p, -n->coeffs[j], *n, p->coeffs[j], Relation::GE));
    }

    std::vector<std::string> vars;
    for (std::size_t k = 0; k < sys.dimension(); ++k)
        if (k != j) vars.push_back(sys.variables()[k]);
    LinIneqSystem result(vars);

    std::map<std::string, std::size_t> seen;
    std::vector<Constraint> kept;
    for (auto& c : out) {
        c.coeffs.erase(c.coeffs.begin() + static_cast<std::ptrdiff_t>(j));
        c.label.clear();
        if (detail::all_zero(c.coeffs)) {
            bool tautology = c.rel == Relation::GE ? c.rhs <= 0 : c.rhs == 0;
            if (tautology) continue;
        }
        c = detail::normalized(std::move(c));
        std::string key = detail::row_key(c);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, kept.size());
            kept.push_back(std::move(c));
        } else if (c.rel == Relation::GE && c.rhs > kept[it->second].rhs) {
            kept[it->second].rhs = c.rhs;
        } else if (c.rel == Relation::EQ && c.rhs != kept[it->second].rhs) {
            // Two parallel equalities with different right sides: keep both so
            // the contradiction survives.
            kept.push_back(std::move(c));
        }
    }
    for (auto& c : kept) result.add(std::move(c));
    return result;
}

struct FMResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value = 0;
};

// Maximises by eliminating every variable from the system augmented with
// t = objective.x. Independent of the simplex; exponential in the worst case.
inline FMResult fm_maximize(const LinIneqSystem& sys, const Vector& objective) {
    if (objective.size() != sys.dimension())
        throw std::invalid_argument("objective has wrong length");
    const std::string t = "__objective";
    LinIneqSystem work = sys;
    work.add_variable(t);
    Vector tie = objective;
    tie.emplace_back(-1);
    work.add_eq(tie, 0);

    while (work.dimension() > 1) {
        // Cheapest variable first: equality substitution, else fewest pairs.
        std::size_t best = 0;
        std::size_t best_cost = static_cast<std::size_t>(-1);
        for (std::size_t k = 0; k < work.dimension(); ++k) {
            if (work.variables()[k] == t) continue;
            std::size_t pos = 0, neg = 0;
            bool has_eq = false;
            for (const auto& c : work.constraints()) {
                if (c.coeffs[k] == 0) continue;
                if (c.rel == Relation::EQ) has_eq = true;
                (c.coeffs[k] > 0 ? pos : neg)++;
            }
            std::size_t cost = has_eq ? 0 : pos * neg;
            if (cost < best_cost) {
                best = k;
                best_cost = cost;
            }
        }
        work = eliminate(work, work.variables()[best]);
    }

    std::optional<Rational> upper, lower;
    for (const auto& c : work.constraints()) {
        const Rational& a = c.coeffs[0];
        if (a == 0) {
            bool ok = c.rel == Relation::GE ? c.rhs <= 0 : c.rhs == 0;
            if (!ok) return FMResult{LPStatus::Infeasible, 0};
            continue;
        }
        Rational v = c.rhs / a;
        if (c.rel == Relation::EQ || a < 0)
            if (!upper || v < *upper) upper = v;
        if (c.rel == Relation::EQ || a > 0)
            if (!lower || v > *lower) lower = v;
    }
    if (upper && lower && *lower > *upper) return FMResult{LPStatus::Infeasible, 0};
    if (!upper) return FMResult{LPStatus::Unbounded, 0};
    return FMResult{LPStatus::Optimal, *upper};
}

}  // namespace lct
