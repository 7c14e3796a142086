#pragma once

#include "lct/rational.hpp"
#include "lct/resolution.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lct {

enum class ComponentKind { Strict, Exceptional };

struct ArrangementComponent {
    std::string id;
    Rational coefficient;  // d
    ComponentKind kind = ComponentKind::Strict;
    Rational discrepancy;  // k, always 0 for strict components
};

struct WeightedArrangement {
    std::vector<ArrangementComponent> components;

    const ArrangementComponent& at(const std::string& id) const {
        for (const auto& c : components)
            if (c.id == id) return c;
        throw std::out_of_range("no component '" + id + "'");
    }
};

// `infinite` is the explicit sentinel for a zero divisor.
struct LctResult {
    bool infinite = false;
    Rational value;
    std::string minimizer;
};

inline LctResult lct_snc(const WeightedArrangement& arr) {
    LctResult best{true, 0, {}};
    for (const auto& c : arr.components) {
        if (c.coefficient < 0) throw std::invalid_argument("negative coefficient on '" + c.id + "'");
        if (c.discrepancy < 0) throw std::invalid_argument("negative discrepancy on '" + c.id + "'");
        if (c.kind == ComponentKind::Strict && c.discrepancy != 0)
            throw std::invalid_argument("strict component '" + c.id + "' must have discrepancy 0");
        if (c.coefficient == 0) continue;
        Rational v = (1 + c.discrepancy) / c.coefficient;
        if (best.infinite || v < best.value) best = LctResult{false, v, c.id};
    }
    return best;
}

// ---------------------------------------------------------------------------
// Blow-up programs

struct Branch {
    std::string id;
    Rational coefficient = 1;
};

struct BranchIncidence {
    std::string branch;
    int multiplicity = 1;
};

// One point blow-up. `exceptionals` lists the divisors of the current
// configuration through the center (earlier steps or supplied base divisors);
// `transverse` declares that branches ending here have distinct tangents.
struct BlowupStep {
    std::string id;
    std::vector<std::string> exceptionals;
    std::vector<BranchIncidence> branches;
    bool transverse = false;
};

struct BlowupProgram {
    std::vector<BlowupStep> steps;
};

// Pre-existing divisors the program can blow up on (the exceptional curves of
// a minimal resolution), with the pairs that meet.
struct BaseDivisors {
    std::vector<ArrangementComponent> components;
    std::vector<std::pair<std::string, std::string>> crossings;
};

namespace detail {

inline std::string step_id(const BlowupProgram& prog, std::size_t i) {
    const auto& id = prog.steps[i].id;
    return id.empty() ? "F" + std::to_string(i + 1) : id;
}

inline void validate_program(const std::vector<Branch>& branches, const BlowupProgram& prog,
                             const BaseDivisors& base) {
    std::set<std::string> branch_ids;
    for (const auto& b : branches) {
        if (b.coefficient < 0)
            throw std::invalid_argument("branch '" + b.id + "' has negative coefficient");
        if (!branch_ids.insert(b.id).second)
            throw std::invalid_argument("duplicate branch '" + b.id + "'");
    }

    std::set<std::string> divisors;
    std::set<std::pair<std::string, std::string>> meets;
    auto link = [&](const std::string& a, const std::string& b) {
        meets.insert({std::min(a, b), std::max(a, b)});
    };
    auto unlink = [&](const std::string& a, const std::string& b) {
        meets.erase({std::min(a, b), std::max(a, b)});
    };
    for (const auto& c : base.components) {
        if (branch_ids.count(c.id)) throw std::invalid_argument("id '" + c.id + "' used twice");
        divisors.insert(c.id);
    }
    for (const auto& [a, b] : base.crossings) {
        if (!divisors.count(a) || !divisors.count(b))
            throw std::invalid_argument("crossing refers to unknown divisor");
        link(a, b);
    }

    std::map<std::string, std::vector<std::size_t>> visits;  // branch -> step indices
    for (std::size_t i = 0; i < prog.steps.size(); ++i) {
        const auto& s = prog.steps[i];
        const std::string id = step_id(prog, i);
        if (divisors.count(id) || branch_ids.count(id))
            throw std::invalid_argument("step id '" + id + "' is not unique");
        if (s.exceptionals.size() > 2)
            throw std::invalid_argument("step '" + id + "': more than two divisors through a center");
        std::set<std::string> inc(s.exceptionals.begin(), s.exceptionals.end());
        if (inc.size() != s.exceptionals.size())
            throw std::invalid_argument("step '" + id + "': repeated incident divisor");
        for (const auto& e : s.exceptionals)
            if (!divisors.count(e))
                throw std::invalid_argument("step '" + id + "': divisor '" + e +
                                            "' is not created before this step");
        if (s.exceptionals.size() == 2 &&
            !meets.count({std::min(s.exceptionals[0], s.exceptionals[1]),
                          std::max(s.exceptionals[0], s.exceptionals[1])}))
            throw std::invalid_argument("step '" + id + "': divisors '" + s.exceptionals[0] +
                                        "' and '" + s.exceptionals[1] + "' do not meet");
        std::set<std::string> seen;
        for (const auto& bi : s.branches) {
            if (!branch_ids.count(bi.branch))
                throw std::invalid_argument("step '" + id + "': unknown branch '" + bi.branch + "'");
            if (!seen.insert(bi.branch).second)
                throw std::invalid_argument("step '" + id + "': branch listed twice");
            if (bi.multiplicity < 1)
                throw std::invalid_argument("step '" + id + "': multiplicity must be positive");
            visits[bi.branch].push_back(i);
        }
        if (s.exceptionals.empty() && s.branches.empty())
            throw std::invalid_argument("step '" + id + "': center lies on nothing");

        if (s.exceptionals.size() == 2) unlink(s.exceptionals[0], s.exceptionals[1]);
        for (const auto& e : s.exceptionals) link(e, id);
        divisors.insert(id);
    }

    auto mult_at = [&](std::size_t step, const std::string& branch) {
        for (const auto& bi : prog.steps[step].branches)
            if (bi.branch == branch) return bi.multiplicity;
        return 0;
    };
    auto incident = [&](std::size_t step, const std::string& div) {
        const auto& ex = prog.steps[step].exceptionals;
        return std::find(ex.begin(), ex.end(), div) != ex.end();
    };

    std::map<std::size_t, std::vector<std::string>> ending;
    for (const auto& [branch, steps] : visits) {
        for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
            if (!incident(steps[k + 1], step_id(prog, steps[k])))
                throw std::invalid_argument("branch '" + branch + "' leaves '" +
                                            step_id(prog, steps[k]) + "' but the next center '" +
                                            step_id(prog, steps[k + 1]) + "' is not on it");
            if (mult_at(steps[k + 1], branch) > mult_at(steps[k], branch))
                throw std::invalid_argument("branch '" + branch + "': multiplicity increases");
        }
        for (std::size_t k = 0; k < steps.size(); ++k) {
            // Proximity: m_s >= sum of m_t over centers t on F_s.
            int later = 0;
            for (std::size_t t = steps[k] + 1; t < prog.steps.size(); ++t)
                if (incident(t, step_id(prog, steps[k]))) later += mult_at(t, branch);
            if (mult_at(steps[k], branch) < later)
                throw std::invalid_argument("branch '" + branch + "' violates proximity at '" +
                                            step_id(prog, steps[k]) + "'");
        }
        if (mult_at(steps.back(), branch) != 1)
            throw std::invalid_argument("branch '" + branch +
                                        "' is still singular after its last center");
        ending[steps.back()].push_back(branch);
    }
    for (const auto& [step, names] : ending)
        if (names.size() >= 2 && !prog.steps[step].transverse)
            throw std::invalid_argument("branches share the final center '" + step_id(prog, step) +
                                        "' without a transversality declaration");
}

}  // namespace detail

// d_F = sum of d over divisors through the center + sum coefficient*mult,
// k_F = 1 + sum of k over divisors through the center.
inline WeightedArrangement run_program(const std::vector<Branch>& branches, const BlowupProgram& prog,
                                       const BaseDivisors& base = {}) {
    detail::validate_program(branches, prog, base);
    WeightedArrangement arr;
    std::map<std::string, std::size_t> where;
    for (const auto& c : base.components) {
        where[c.id] = arr.components.size();
        arr.components.push_back(c);
    }
    std::map<std::string, Rational> coeff;
    for (const auto& b : branches) coeff[b.id] = b.coefficient;
    for (std::size_t i = 0; i < prog.steps.size(); ++i) {
        const auto& s = prog.steps[i];
        Rational d = 0, k = 1;
        for (const auto& e : s.exceptionals) {
            const auto& c = arr.components[where.at(e)];
            d += c.coefficient;
            k += c.discrepancy;
        }
        for (const auto& bi : s.branches) d += coeff.at(bi.branch) * bi.multiplicity;
        std::string id = detail::step_id(prog, i);
        where[id] = arr.components.size();
        arr.components.push_back({id, d, ComponentKind::Exceptional, k});
    }
    for (const auto& b : branches) arr.components.push_back({b.id, b.coefficient, ComponentKind::Strict, 0});
    return arr;
}

inline LctResult lct_germ(const std::vector<Branch>& branches, const BlowupProgram& prog) {
    return lct_snc(run_program(branches, prog));
}

// Built-in germs: branch lists and programs.
struct Germ {
    std::string name;
    std::vector<Branch> branches;
    BlowupProgram program;
};

inline std::vector<Germ> builtin_germs() {
    std::vector<Germ> g;
    g.push_back({"node", {{"C1", 1}, {"C2", 1}}, {{{"F1", {}, {{"C1", 1}, {"C2", 1}}, true}}}});
    g.push_back({"cusp",
                 {{"C", 1}},
                 {{{"F1", {}, {{"C", 2}}, false},
                   {"F2", {"F1"}, {{"C", 1}}, false},
                   {"F3", {"F1", "F2"}, {{"C", 1}}, false}}}});
    g.push_back({"tacnode",
                 {{"C1", 1}, {"C2", 1}},
                 {{{"F1", {}, {{"C1", 1}, {"C2", 1}}, false},
                   {"F2", {"F1"}, {{"C1", 1}, {"C2", 1}}, true}}}});
    g.push_back({"triple_point",
                 {{"C1", 1}, {"C2", 1}, {"C3", 1}},
                 {{{"F1", {}, {{"C1", 1}, {"C2", 1}, {"C3", 1}}, true}}}});
    g.push_back({"double_tacnode",
                 {{"C1", 1}, {"C2", 1}, {"C3", 1}, {"C4", 1}},
                 {{{"F1", {}, {{"C1", 1}, {"C2", 1}, {"C3", 1}, {"C4", 1}}, false},
                   {"F2", {"F1"}, {{"C1", 1}, {"C2", 1}}, true},
                   {"F3", {"F1"}, {{"C3", 1}, {"C4", 1}}, true}}}});
    g.push_back({"cusp_and_line",
                 {{"C", 1}, {"L", 1}},
                 {{{"F1", {}, {{"C", 2}, {"L", 1}}, false},
                   {"F2", {"F1"}, {{"C", 1}}, false},
                   {"F3", {"F1", "F2"}, {{"C", 1}}, false}}}});
    return g;
}

inline const Germ& builtin_germ(const std::string& name) {
    static const std::vector<Germ> germs = builtin_germs();
    for (const auto& g : germs)
        if (g.name == name) return g;
    throw std::invalid_argument("unknown built-in germ '" + name + "'");
}

// ---------------------------------------------------------------------------
// Du Val points

struct StrictCurve {
    CurveClass curve;
    Rational coefficient = 1;
};

inline std::string exceptional_id(int i) { return "E" + std::to_string(i); }

// Exceptional curves E_i carry discrepancy 0 and coefficient sum coeff*n_i.
inline WeightedArrangement ade_arrangement(DynkinType t, const std::vector<StrictCurve>& strict) {
    Vector d(t.rank, Rational(0));
    for (const auto& s : strict) {
        if (s.coefficient < 0) throw std::invalid_argument("negative coefficient on '" + s.curve.name + "'");
        auto n = pullback_coefficients(t, s.curve.exc_intersections);
        for (int i = 0; i < t.rank; ++i) d[i] += s.coefficient * n.coeffs[i];
    }
    WeightedArrangement arr;
    for (int i = 0; i < t.rank; ++i)
        arr.components.push_back({exceptional_id(i + 1), d[i], ComponentKind::Exceptional, 0});
    for (const auto& s : strict)
        arr.components.push_back({s.curve.name, s.coefficient, ComponentKind::Strict, 0});
    return arr;
}

// Empty when the total transform can be treated as SNC; otherwise the reason.
inline std::optional<std::string> non_snc_reason(DynkinType t, const std::vector<StrictCurve>& strict) {
    auto edges = dynkin_edges(t);
    for (const auto& s : strict) {
        const auto& b = s.curve.exc_intersections;
        for (int i = 0; i < t.rank; ++i)
            if (b[i] >= 2)
                return "'" + s.curve.name + "' meets " + exceptional_id(i + 1) + " with multiplicity " +
                       std::to_string(b[i]);
        for (auto [i, j] : edges)
            if (b[i] > 0 && b[j] > 0)
                return "'" + s.curve.name + "' meets the adjacent curves " + exceptional_id(i + 1) +
                       " and " + exceptional_id(j + 1);
    }
    return std::nullopt;
}

inline LctResult lct_at_ade_point(DynkinType t, const std::vector<StrictCurve>& strict,
                                  const std::optional<BlowupProgram>& germs = std::nullopt) {
    for (const auto& s : strict)
        if (static_cast<int>(s.curve.exc_intersections.size()) != t.rank)
            throw std::invalid_argument("curve '" + s.curve.name + "' has the wrong number of incidences");
    WeightedArrangement arr = ade_arrangement(t, strict);
    if (!germs) {
        if (auto why = non_snc_reason(t, strict))
            throw std::invalid_argument("total transform is not SNC (" + *why +
                                        "); a blow-up program is required");
        return lct_snc(arr);
    }
    BaseDivisors base;
    for (int i = 0; i < t.rank; ++i) base.components.push_back(arr.components[i]);
    for (auto [i, j] : dynkin_edges(t)) base.crossings.emplace_back(exceptional_id(i + 1), exceptional_id(j + 1));
    std::vector<Branch> branches;
    for (const auto& s : strict) branches.push_back({s.curve.name, s.coefficient});
    return lct_snc(run_program(branches, *germs, base));
}

// ---------------------------------------------------------------------------
// Convexity

struct ConvexityResult {
    Rational alpha;
    Vector dprime;
};

// alpha = min a_i/abar_i over abar_i != 0, dprime = (a - alpha abar)/(1 - alpha).
inline ConvexityResult convexity_reduce(const Vector& a, const Vector& abar) {
    if (a.size() != abar.size()) throw std::invalid_argument("convexity_reduce: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || abar[i] < 0)
            throw std::invalid_argument("convexity_reduce: coefficients must be non-negative");
    if (a == abar) throw std::invalid_argument("convexity_reduce: a equals abar (alpha = 1)");
    std::optional<Rational> alpha;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (abar[i] != 0) {
            Rational r = a[i] / abar[i];
            if (!alpha || r < *alpha) alpha = r;
        }
    if (!alpha) throw std::invalid_argument("convexity_reduce: abar is zero");
    if (*alpha == 0) return {0, a};
    if (*alpha >= 1) throw std::invalid_argument("convexity_reduce: alpha >= 1, abar is not dominated");
    Vector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = (a[i] - *alpha * abar[i]) / (1 - *alpha);
    return {*alpha, d};
}

}  // namespace lct
