#pragma once

#include "lct/lct.hpp"
#include "lct/polytope.hpp"
#include "lct/rational.hpp"
#include "lct/resolution.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lct {

// ---------------------------------------------------------------------------
// Configurations

struct SingularityConfiguration {
    std::vector<DynkinType> points;  // canonical order: E, D, A; rank descending

    static SingularityConfiguration from(std::vector<DynkinType> pts) {
        auto key = [](const DynkinType& t) {
            int k = t.kind == DynkinKind::E ? 0 : t.kind == DynkinKind::D ? 1 : 2;
            return std::make_pair(k, -t.rank);
        };
        std::stable_sort(pts.begin(), pts.end(),
                         [&](const DynkinType& a, const DynkinType& b) { return key(a) < key(b); });
        return SingularityConfiguration{std::move(pts)};
    }

    // Accepts "A7+A1", "2A4", "D4+4A1", and "smooth" / "none" / "" for no points.
    static SingularityConfiguration parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '\t') s += c;
        if (s.empty() || s == "smooth" || s == "none") return {};
        std::vector<DynkinType> pts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, '+')) {
            if (item.empty()) throw std::invalid_argument("malformed configuration '" + text + "'");
            std::size_t i = 0;
            while (i < item.size() && item[i] >= '0' && item[i] <= '9') ++i;
            int count = i == 0 ? 1 : std::stoi(item.substr(0, i));
            if (count < 1) throw std::invalid_argument("malformed configuration '" + text + "'");
            DynkinType t = DynkinType::parse(item.substr(i));
            for (int k = 0; k < count; ++k) pts.push_back(t);
        }
        return from(std::move(pts));
    }

    std::string name() const {
        if (points.empty()) return "smooth";
        std::string out;
        for (std::size_t i = 0; i < points.size();) {
            std::size_t j = i;
            while (j < points.size() && points[j] == points[i]) ++j;
            if (!out.empty()) out += "+";
            if (j - i > 1) out += std::to_string(j - i);
            out += points[i].name();
            i = j;
        }
        return out;
    }

    bool has(DynkinKind kind, int rank) const {
        return std::any_of(points.begin(), points.end(),
                           [&](const DynkinType& t) { return t.kind == kind && t.rank == rank; });
    }
    bool has_kind(DynkinKind kind) const {
        return std::any_of(points.begin(), points.end(), [&](const DynkinType& t) { return t.kind == kind; });
    }
    bool only_a1_a2() const {
        return std::all_of(points.begin(), points.end(), [](const DynkinType& t) {
            return t.kind == DynkinKind::A && t.rank <= 2;
        });
    }

    bool operator==(const SingularityConfiguration&) const = default;
};

inline const std::vector<std::string>& admissible_list() {
    static const std::vector<std::string> list = {
        "E8", "E7", "E7+A1", "E6", "E6+A2", "E6+A1",
        "D8", "D7", "D6", "D6+2A1", "D6+A1", "D5", "D5+A3", "D5+A2", "D5+2A1", "D5+A1",
        "D4", "2D4", "D4+A3", "D4+A2", "D4+4A1", "D4+3A1", "D4+2A1", "D4+A1",
        "A8", "A7", "A7+A1", "A6", "A6+A1",
        "A5", "A5+A1", "A5+2A1", "A5+A2", "A5+A2+A1",
        "A4", "2A4", "A4+A3", "A4+A2+A1", "A4+A2", "A4+2A1", "A4+A1",
        "A3", "2A3", "2A3+2A1", "A3+A2", "A3+A2+A1", "A3+A2+2A1", "A3+4A1", "A3+3A1", "A3+2A1",
        "A3+A1",
    };
    return list;
}

inline bool admissible(const SingularityConfiguration& config) {
    if (config.only_a1_a2()) return true;
    static const std::set<std::string> names = [] {
        std::set<std::string> s;
        for (const auto& n : admissible_list()) s.insert(SingularityConfiguration::parse(n).name());
        return s;
    }();
    return names.count(config.name()) > 0;
}

// ---------------------------------------------------------------------------
// Flags and lct_1

enum class CuspStratum { CuspAtA2, CuspAtA1, CuspAtSmooth, NoCusp };

inline const char* cusp_name(CuspStratum c) {
    switch (c) {
        case CuspStratum::CuspAtA2: return "a2";
        case CuspStratum::CuspAtA1: return "a1";
        case CuspStratum::CuspAtSmooth: return "smooth";
        case CuspStratum::NoCusp: return "none";
    }
    return "?";
}

inline CuspStratum parse_cusp(const std::string& s) {
    if (s == "a2" || s == "A2") return CuspStratum::CuspAtA2;
    if (s == "a1" || s == "A1") return CuspStratum::CuspAtA1;
    if (s == "smooth") return CuspStratum::CuspAtSmooth;
    if (s == "none") return CuspStratum::NoCusp;
    throw std::invalid_argument("unknown cusp stratum '" + s + "' (expected none, smooth, a1, a2)");
}

// branch_R_irreducible only matters when an A7 point is present.
struct SurfaceFlags {
    bool branch_R_irreducible = true;
    CuspStratum cusp = CuspStratum::NoCusp;
};

// The cusp stratum only drives lct_1 when there is no D or E point, so it
// is only checked against the configuration in that case.
inline void validate_flags(const SingularityConfiguration& config, const SurfaceFlags& flags) {
    if (config.has_kind(DynkinKind::D) || config.has_kind(DynkinKind::E)) return;
    if (flags.cusp == CuspStratum::CuspAtA2 && !config.has(DynkinKind::A, 2))
        throw std::invalid_argument("cusp at an A2 point requires an A2 point in " + config.name());
    if (flags.cusp == CuspStratum::CuspAtA1 && !config.has(DynkinKind::A, 1))
        throw std::invalid_argument("cusp at an A1 point requires an A1 point in " + config.name());
}

inline void require_admissible(const SingularityConfiguration& config) {
    if (!admissible(config))
        throw std::invalid_argument("configuration " + config.name() +
                                    " does not occur on a degree-1 del Pezzo surface");
}

inline Rational lct1_classify(const SingularityConfiguration& config, const SurfaceFlags& flags) {
    require_admissible(config);
    validate_flags(config, flags);
    if (config.has(DynkinKind::E, 8)) return frac(1, 6);
    if (config.has(DynkinKind::E, 7)) return frac(1, 4);
    if (config.has(DynkinKind::E, 6)) return frac(1, 3);
    if (config.has_kind(DynkinKind::D)) return frac(1, 2);
    switch (flags.cusp) {
        case CuspStratum::CuspAtA2: return frac(2, 3);
        case CuspStratum::CuspAtA1: return frac(3, 4);
        case CuspStratum::CuspAtSmooth: return frac(5, 6);
        case CuspStratum::NoCusp: return 1;
    }
    return 1;
}

// Every cusp stratum consistent with the configuration.
inline std::vector<CuspStratum> consistent_strata(const SingularityConfiguration& config) {
    if (config.has_kind(DynkinKind::D) || config.has_kind(DynkinKind::E)) return {CuspStratum::NoCusp};
    std::vector<CuspStratum> out{CuspStratum::NoCusp, CuspStratum::CuspAtSmooth};
    if (config.has(DynkinKind::A, 1)) out.push_back(CuspStratum::CuspAtA1);
    if (config.has(DynkinKind::A, 2)) out.push_back(CuspStratum::CuspAtA2);
    return out;
}

// ---------------------------------------------------------------------------
// Base systems

enum class SystemVariant { SinglePoint, ManyPoints };

inline std::vector<std::string> coefficient_names(int m) {
    std::vector<std::string> v;
    for (int i = 1; i <= m; ++i) v.push_back("a" + std::to_string(i));
    return v;
}

// Rows D-bar.E_j >= 0 from the intersection matrix plus D-bar.C-bar >= 0.
// For kind A the many-points system coincides with the single-point one.
inline LinIneqSystem base_system(DynkinType t, SystemVariant = SystemVariant::SinglePoint) {
    IntersectionMatrix m = intersection_matrix(t);
    const int n = t.rank;
    LinIneqSystem sys(coefficient_names(n));
    for (int j = 0; j < n; ++j) {
        Vector row(n);
        for (int i = 0; i < n; ++i) row[i] = -m.at(j, i);
        sys.add_ge(row, 0, "E" + std::to_string(j + 1));
    }
    auto b = anticanonical_incidence(t);
    Vector row(n);
    for (int i = 0; i < n; ++i) row[i] = -b[i];
    sys.add_ge(row, -1, "C");
    return sys;
}

// ---------------------------------------------------------------------------
// Witnesses

struct WitnessComponent {
    CurveClass curve;
    int multiplicity = 1;
};

// A member W of |-nK_X| concentrated at one singular point. `claimed` is
// c(X, W); the table value is n * claimed.
struct WitnessDivisor {
    std::string name;
    int pluri_degree = 1;
    std::size_t at_point = 0;
    DynkinType type;
    std::vector<WitnessComponent> components;
    Rational claimed;
    std::optional<BlowupProgram> germ;

    int content() const {
        int g = 0;
        for (const auto& c : components) g = std::gcd(g, c.multiplicity);
        return g == 0 ? 1 : g;
    }

    std::vector<StrictCurve> strict_curves() const {
        std::vector<StrictCurve> out;
        for (const auto& c : components) out.push_back({c.curve, c.multiplicity});
        return out;
    }

    // Pullback coefficients of the primitive divisor W / content().
    Vector coefficients() const {
        Vector d(type.rank, Rational(0));
        const int g = content();
        for (const auto& c : components) {
            auto n = pullback_coefficients(type, c.curve.exc_intersections);
            for (int i = 0; i < type.rank; ++i) d[i] += Rational(c.multiplicity, g) * n.coeffs[i];
        }
        return d;
    }

    LctResult evaluate() const { return lct_at_ade_point(type, strict_curves(), germ); }
};

inline WitnessDivisor make_witness(std::string name, int n, std::size_t at, DynkinType t,
                                   std::vector<WitnessComponent> comps, Rational claimed,
                                   std::optional<BlowupProgram> germ = std::nullopt) {
    return WitnessDivisor{std::move(name), n, at, t, std::move(comps), std::move(claimed), std::move(germ)};
}

// Z at an A4 point: -K.Z = 2, passes through E2 cap E3, pullback (1,2,2,1).
inline CurveClass a4_curve_z() { return CurveClass{"Z", 2, 0, {0, 1, 1, 0}}; }

inline BlowupProgram a4_z_program() {
    return BlowupProgram{{{"G", {"E2", "E3"}, {{"Z", 1}}, true}}};
}

struct TableRow {
    Rational value;
    int level = 1;
    std::optional<WitnessDivisor> witness;
};

inline std::size_t point_index(const SingularityConfiguration& c, DynkinKind kind, int rank) {
    for (std::size_t i = 0; i < c.points.size(); ++i)
        if (c.points[i].kind == kind && c.points[i].rank == rank) return i;
    throw std::logic_error("point not present");
}

inline TableRow lct_table(const SingularityConfiguration& config, const SurfaceFlags& flags) {
    const Rational lct1 = lct1_classify(config, flags);
    auto A = [](int m) { return DynkinType::make(DynkinKind::A, m); };
    auto D = [](int m) { return DynkinType::make(DynkinKind::D, m); };
    using K = DynkinKind;

    if (config.has(K::D, 8)) {
        auto t = D(8);
        return {frac(1, 3), 2,
                make_witness("L1", 2, point_index(config, K::D, 8), t, {{unit_curve(t, 1, "L1"), 2}},
                             frac(1, 6))};
    }
    if (config.has(K::D, 7)) {
        auto t = D(7);
        return {frac(2, 5), 2,
                make_witness("L1+L2", 2, point_index(config, K::D, 7), t,
                             {{unit_curve(t, 1, "L1"), 1}, {unit_curve(t, 2, "L2"), 1}}, frac(1, 5))};
    }
    if (config.has(K::A, 8)) {
        auto t = A(8);
        return {frac(1, 2), 3,
                make_witness("L3", 3, point_index(config, K::A, 8), t, {{unit_curve(t, 3, "L3"), 3}},
                             frac(1, 6))};
    }
    if (config.has(K::A, 7)) {
        auto t = A(7);
        std::size_t at = point_index(config, K::A, 7);
        bool many = config.points.size() > 1;
        if (many || !flags.branch_R_irreducible)
            return {frac(1, 2), 2, make_witness("L4", 2, at, t, {{unit_curve(t, 4, "L4"), 2}}, frac(1, 4))};
        return {frac(3, 5), 3,
                make_witness("L2+2L3", 3, at, t, {{unit_curve(t, 2, "L2"), 1}, {unit_curve(t, 3, "L3"), 2}},
                             frac(1, 5))};
    }
    if (config.has(K::A, 6)) {
        auto t = A(6);
        return {frac(2, 3), 2,
                make_witness("L3+L4", 2, point_index(config, K::A, 6), t,
                             {{unit_curve(t, 3, "L3"), 1}, {unit_curve(t, 4, "L4"), 1}}, frac(1, 3))};
    }
    if (config.has(K::A, 5)) {
        auto t = A(5);
        return {frac(2, 3), 2,
                make_witness("L3+tau(L3)", 2, point_index(config, K::A, 5), t,
                             {{unit_curve(t, 3, "L3"), 1}, {unit_curve(t, 3, "tau(L3)"), 1}}, frac(1, 3))};
    }
    if (config.has(K::A, 4)) {
        auto t = A(4);
        Rational v = lct1 < frac(4, 5) ? lct1 : frac(4, 5);
        TableRow row{v, 2, std::nullopt};
        if (v == frac(4, 5))
            row.witness = make_witness("Z", 2, point_index(config, K::A, 4), t, {{a4_curve_z(), 1}},
                                       frac(2, 5), a4_z_program());
        return row;
    }
    return {lct1, 1, std::nullopt};
}

// ---------------------------------------------------------------------------
// Scenarios

// u stands for 1/mu. A scenario encodes one case of the argument that no
// divisor can have a non-klt point for mu below the target: the closure
// must satisfy u <= 1/target_mu.
struct ScenarioSystem {
    std::string id;
    std::string configuration;
    std::size_t point = 0;
    DynkinType type;
    std::vector<std::string> lemmas;
    std::string candidate;
    LinIneqSystem system;
    Rational target_mu;

    Vector objective() const { return system.row({{"u", 1}}); }
};

struct ScenarioList {
    std::vector<ScenarioSystem> scenarios;
    std::optional<std::string> notice;
};

namespace detail {

inline LinIneqSystem scenario_skeleton(DynkinType t, SystemVariant variant, bool with_delta) {
    LinIneqSystem base = base_system(t, variant);
    std::vector<std::string> vars = base.variables();
    if (with_delta) vars.push_back("delta");
    vars.push_back("u");
    LinIneqSystem sys(vars);
    for (const auto& c : base.constraints()) {
        Constraint e = c;
        e.coeffs.resize(vars.size(), Rational(0));
        sys.add(std::move(e));
    }
    for (int i = 1; i <= t.rank; ++i) sys.ge({{"a" + std::to_string(i), 1}}, 0, "a" + std::to_string(i) + ">=0");
    sys.ge({{"u", 1}}, 0, "u>=0");
    return sys;
}

inline std::string a(int i) { return "a" + std::to_string(i); }

// D-bar.E_j as terms, from the intersection matrix.
inline Terms e_row(DynkinType t, int j) {
    IntersectionMatrix m = intersection_matrix(t);
    Terms out;
    for (int i = 1; i <= t.rank; ++i)
        if (m.entry(j, i) != 0) out.push_back({a(i), Rational(-m.entry(j, i))});
    return out;
}

// Non-klt at Q = E_k cap E_{k+1}: D-bar.E_k >= u - a_{k+1} and the mirror.
inline void add_crossing(LinIneqSystem& sys, DynkinType t, int k) {
    Terms lhs = e_row(t, k);
    lhs.push_back({a(k + 1), 1});
    lhs.push_back({"u", -1});
    sys.ge(lhs, 0, "adjunction E" + std::to_string(k));
    Terms rhs = e_row(t, k + 1);
    rhs.push_back({a(k), 1});
    rhs.push_back({"u", -1});
    sys.ge(rhs, 0, "adjunction E" + std::to_string(k + 1));
}

inline std::string join_bound(const std::vector<int>& idx) {
    std::string s = "[";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + a(idx[i]);
    return s + "<=1]";
}

// Non-containment alternatives for the witness curves at an A_m point.
inline std::vector<std::vector<int>> a_branches(int m, bool many, const SurfaceFlags& flags) {
    switch (m) {
        case 8: return {{3, 6}};
        case 7:
            if (many || !flags.branch_R_irreducible) return {{4}};
            return {{2, 5}, {3, 6}};
        case 6: return {{2, 4}, {3, 4, 5}};
        case 5: return {{3}};
        default: return {{}};
    }
}

inline std::string a_lemma(int m, bool many, const SurfaceFlags& flags) {
    if (m == 7 && !many) return flags.branch_R_irreducible ? "single-point-A7-irreducible" : "single-point-A7-reducible";
    return "single-point-A" + std::to_string(m);
}

}  // namespace detail

inline ScenarioList build_scenarios(const SingularityConfiguration& config, const SurfaceFlags& flags,
                                    const Rational& target_mu) {
    require_admissible(config);
    validate_flags(config, flags);
    if (target_mu <= 0) throw std::invalid_argument("target must be positive");
    ScenarioList out;
    const bool many = config.points.size() > 1;
    const SystemVariant variant = many ? SystemVariant::ManyPoints : SystemVariant::SinglePoint;
    std::map<std::string, int> seen;
    for (const auto& t : config.points) seen[t.name()]++;
    std::map<std::string, int> ordinal;

    for (std::size_t p = 0; p < config.points.size(); ++p) {
        const DynkinType t = config.points[p];
        if (t.kind == DynkinKind::A && t.rank <= 2) continue;
        std::string tag = t.name();
        if (seen[t.name()] > 1) tag += "#" + std::to_string(++ordinal[t.name()]);

        auto make = [&](std::string suffix, std::vector<std::string> lemmas, std::string candidate,
                        LinIneqSystem sys) {
            if (many) lemmas.push_back("many-points-" + t.name());
            out.scenarios.push_back(ScenarioSystem{tag + "." + suffix, config.name(), p, t, std::move(lemmas),
                                                   std::move(candidate), std::move(sys), target_mu});
        };

        if (t.kind != DynkinKind::A) {
            LinIneqSystem sys = detail::scenario_skeleton(t, variant, false);
            sys.eq({{"a3", 1}, {"u", -1}}, 0, "mu a3 = 1");
            make("a3", {"non-cyclic-blow-up"}, "E3", std::move(sys));
            continue;
        }
        const int m = t.rank;
        if (m == 3) {
            for (int i = 1; i <= 3; ++i) {
                LinIneqSystem sys = detail::scenario_skeleton(t, variant, false);
                sys.ge({{detail::a(i), 1}, {"u", -1}}, 0, "mu a" + std::to_string(i) + " >= 1");
                make("sat" + std::to_string(i), {"A3-point"}, "E" + std::to_string(i), std::move(sys));
            }
            continue;
        }
        if (m == 4) {
            // Blow-up of Q = E2 cap E3 with delta = mult_Q(D-bar); the non-klt
            // point O is taken on the proper transform of E2 (the E3 case is
            // its mirror image).
            LinIneqSystem sys = detail::scenario_skeleton(t, variant, true);
            detail::add_crossing(sys, t, 2);
            sys.ge({{"delta", 1}}, 0, "delta>=0");
            sys.ge({{"a2", 2}, {"a1", -1}, {"a3", -1}, {"delta", -1}}, 0, "E2~.D~ >= 0");
            sys.ge({{"a3", 2}, {"a2", -1}, {"a4", -1}, {"delta", -1}}, 0, "E3~.D~ >= 0");
            sys.le({{"a2", 1}, {"a3", 1}, {"delta", 1}}, 2, "Z~.D~ >= 0");
            sys.le({{"delta", 1}}, 1, "delta<=1");
            sys.ge({{"delta", 1}, {"a2", 1}, {"u", -1}}, 0, "adjunction E at O");
            make("E2xE3", {"single-point-A4"}, "E2xE3", std::move(sys));
            continue;
        }
        const auto branches = detail::a_branches(m, many, flags);
        for (const auto& branch : branches) {
            for (int k = 2; k <= m - 2; ++k) {
                LinIneqSystem sys = detail::scenario_skeleton(t, variant, false);
                for (int i : branch) sys.le({{detail::a(i), 1}}, 1, "L" + std::to_string(i) + " not in support");
                detail::add_crossing(sys, t, k);
                std::string q = "E" + std::to_string(k) + "xE" + std::to_string(k + 1);
                std::string suffix = branches.size() > 1 ? detail::join_bound(branch) + "." + q : q;
                make(suffix, {detail::a_lemma(m, many, flags)}, q, std::move(sys));
            }
        }
    }
    if (out.scenarios.empty())
        out.notice = "configuration " + config.name() +
                     " has only points of type A1/A2; no scenario systems apply";
    return out;
}

// ---------------------------------------------------------------------------
// Certification

enum class Closure { Infeasible, Tight, Open };

inline const char* closure_name(Closure c) {
    switch (c) {
        case Closure::Infeasible: return "infeasible";
        case Closure::Tight: return "tight";
        case Closure::Open: return "open";
    }
    return "?";
}

// max_u bounds 1/mu over the scenario. The scenario passes when max_u <=
// 1/target. The closure adds u >= 1/target: either it is infeasible (with a
// Farkas certificate) or it is tight, meaning it is feasible only at
// u = 1/target exactly.
struct Certification {
    ScenarioSystem scenario;
    LPResult max_u;
    Rational bound;
    Closure closure = Closure::Open;
    std::optional<FarkasCertificate> closure_certificate;
    bool passed = false;
};

inline Certification certify_scenario(const ScenarioSystem& s) {
    Certification c{s, maximize(s.system, s.objective()), 1 / s.target_mu, Closure::Open, std::nullopt, false};
    if (c.max_u.status == LPStatus::Unbounded) return c;
    LinIneqSystem closed = s.system;
    closed.ge({{"u", 1}}, c.bound, "u >= 1/target");
    if (c.max_u.status == LPStatus::Infeasible || c.max_u.value < c.bound) {
        LPResult r = maximize(closed, s.objective(), MaximizeOptions{false});
        if (r.status == LPStatus::Infeasible) {
            c.closure = Closure::Infeasible;
            c.closure_certificate = r.certificate;
            c.passed = true;
        }
    } else if (c.max_u.value == c.bound) {
        c.closure = Closure::Tight;
        c.passed = true;
    }
    return c;
}

struct CertifyReport {
    std::string configuration;
    SurfaceFlags flags;
    TableRow row;
    std::vector<Certification> certifications;
    std::optional<std::string> notice;

    bool passed() const {
        return std::all_of(certifications.begin(), certifications.end(),
                           [](const Certification& c) { return c.passed; });
    }
};

inline CertifyReport certify_lower_bound(const SingularityConfiguration& config, const SurfaceFlags& flags,
                                         bool parallel = false) {
    CertifyReport rep{config.name(), flags, lct_table(config, flags), {}, std::nullopt};
    ScenarioList list = build_scenarios(config, flags, rep.row.value);
    rep.notice = list.notice;
    if (parallel) {
        std::vector<std::future<Certification>> jobs;
        for (const auto& s : list.scenarios) jobs.push_back(std::async(std::launch::async, certify_scenario, s));
        for (auto& j : jobs) rep.certifications.push_back(j.get());
    } else {
        for (const auto& s : list.scenarios) rep.certifications.push_back(certify_scenario(s));
    }
    std::sort(rep.certifications.begin(), rep.certifications.end(),
              [](const Certification& x, const Certification& y) { return x.scenario.id < y.scenario.id; });
    return rep;
}

// Pure A1/A2 configurations of total rank at most 8, including the smooth case.
inline std::vector<SingularityConfiguration> small_a1_a2_configurations() {
    std::vector<SingularityConfiguration> out;
    for (int twos = 0; 2 * twos <= 8; ++twos)
        for (int ones = 0; ones + 2 * twos <= 8; ++ones) {
            std::vector<DynkinType> pts;
            for (int i = 0; i < twos; ++i) pts.push_back(DynkinType::make(DynkinKind::A, 2));
            for (int i = 0; i < ones; ++i) pts.push_back(DynkinType::make(DynkinKind::A, 1));
            out.push_back(SingularityConfiguration::from(std::move(pts)));
        }
    return out;
}

struct SweepEntry {
    SingularityConfiguration config;
    SurfaceFlags flags;
};

// Every listed configuration plus small pure A1/A2 ones, with every consistent
// flag combination; sorted by configuration name.
inline std::vector<SweepEntry> sweep_entries() {
    std::vector<SingularityConfiguration> configs;
    for (const auto& n : admissible_list()) configs.push_back(SingularityConfiguration::parse(n));
    for (auto& c : small_a1_a2_configurations()) configs.push_back(std::move(c));
    std::vector<SweepEntry> out;
    for (const auto& c : configs) {
        std::vector<bool> r_values{true};
        if (c.has(DynkinKind::A, 7)) r_values.push_back(false);
        for (bool r : r_values)
            for (auto cusp : consistent_strata(c)) out.push_back({c, SurfaceFlags{r, cusp}});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const SweepEntry& x, const SweepEntry& y) { return x.config.name() < y.config.name(); });
    return out;
}

}  // namespace lct
