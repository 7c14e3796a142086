#pragma once

#include "lct/json_io.hpp"

#include <future>
#include <string>
#include <vector>

namespace lct::cli {

using json_io::json;
using json_io::SchemaError;

struct RunRequest {
    std::string subcommand;
    json payload = json::object();
};

struct RunResult {
    int exit_code = 0;
    json output;
};

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"table",   "certify",  "lct",  "pullback",
                                                "polytope", "theorem-i", "germ"};
    return names;
}

namespace detail {

using namespace json_io;

inline SurfaceFlags decode_flags(const json& p) {
    SurfaceFlags f;
    if (has(p, "r_reducible")) f.branch_R_irreducible = !get_bool(p["r_reducible"], "r_reducible");
    if (has(p, "cusp")) {
        try {
            f.cusp = parse_cusp(get_string(p["cusp"], "cusp"));
        } catch (const SchemaError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    return f;
}

inline SingularityConfiguration decode_config(const json& p) {
    std::string text = get_string(field(p, "config"), "config");
    try {
        return SingularityConfiguration::parse(text);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

// {"config": "A7+A1", "r_reducible": false, "cusp": "none"}
inline RunResult table(const json& p) {
    only_keys(p, {"config", "r_reducible", "cusp"}, "table payload");
    auto config = decode_config(p);
    auto flags = decode_flags(p);
    TableRow row = lct_table(config, flags);
    return {0, encode_row(config.name(), flags, row)};
}

// {"config": ..., flags} for one surface or {"all": true} for the sweep.
// "systems": true embeds every scenario's inequality system.
inline RunResult certify(const json& p) {
    only_keys(p, {"config", "r_reducible", "cusp", "all", "systems"}, "certify payload");
    const bool all = has(p, "all") && get_bool(p["all"], "all");
    const bool systems = has(p, "systems") && get_bool(p["systems"], "systems");
    if (all == has(p, "config")) throw SchemaError("certify needs exactly one of 'config' or 'all'");
    if (!all) {
        CertifyReport rep = certify_lower_bound(decode_config(p), decode_flags(p), true);
        return {rep.passed() ? 0 : 2, encode(rep, systems)};
    }
    if (has(p, "r_reducible") || has(p, "cusp"))
        throw SchemaError("flags cannot be combined with 'all'; the sweep covers every consistent flag set");
    auto entries = sweep_entries();
    std::vector<std::future<CertifyReport>> jobs;
    for (const auto& e : entries)
        jobs.push_back(std::async(std::launch::async, [e] { return certify_lower_bound(e.config, e.flags); }));
    json reports = json::array();
    bool passed = true;
    std::size_t scenarios = 0, failures = 0;
    for (auto& j : jobs) {
        CertifyReport rep = j.get();
        passed = passed && rep.passed();
        scenarios += rep.certifications.size();
        for (const auto& c : rep.certifications) failures += c.passed ? 0 : 1;
        reports.push_back(encode(rep, systems));
    }
    json out{{"passed", passed},
             {"surfaces", entries.size()},
             {"scenarios", scenarios},
             {"failures", failures},
             {"reports", std::move(reports)}};
    return {passed ? 0 : 2, std::move(out)};
}

// {"type": "A6", "curves": [{"curve": {...}, "coefficient": "1/3"}], "program": {...}}
// or {"arrangement": [{"id", "d", "k"}]} for an SNC arrangement given directly.
inline RunResult lct(const json& p) {
    only_keys(p, {"type", "curves", "program", "arrangement"}, "lct payload");
    if (has(p, "arrangement")) {
        if (has(p, "type") || has(p, "curves") || has(p, "program"))
            throw SchemaError("'arrangement' cannot be combined with other fields");
        WeightedArrangement arr;
        for (const auto& c : get_array(p["arrangement"], "arrangement")) {
            only_keys(c, {"id", "d", "k", "kind"}, "arrangement component");
            ArrangementComponent comp;
            comp.id = get_string(field(c, "id"), "id");
            comp.coefficient = decode_rational(field(c, "d"), "d");
            comp.discrepancy = has(c, "k") ? decode_rational(c["k"], "k") : Rational(0);
            std::string kind = has(c, "kind") ? get_string(c["kind"], "kind") : "exceptional";
            if (kind != "strict" && kind != "exceptional") throw SchemaError("kind must be strict or exceptional");
            comp.kind = kind == "strict" ? ComponentKind::Strict : ComponentKind::Exceptional;
            if (comp.coefficient < 0) throw SchemaError("coefficients must be non-negative");
            arr.components.push_back(std::move(comp));
        }
        return {0, encode(lct_snc(arr))};
    }
    DynkinType t = decode_dynkin(field(p, "type"));
    std::vector<StrictCurve> strict;
    for (const auto& c : get_array(field(p, "curves"), "curves")) {
        only_keys(c, {"curve", "coefficient"}, "strict curve");
        StrictCurve s{decode_curve(field(c, "curve")),
                      has(c, "coefficient") ? decode_rational(c["coefficient"], "coefficient") : Rational(1)};
        strict.push_back(std::move(s));
    }
    std::optional<BlowupProgram> prog;
    if (has(p, "program")) prog = decode_program(p["program"]);
    json out = encode(lct_at_ade_point(t, strict, prog));
    out["exceptional_coefficients"] = json::array();
    WeightedArrangement arr = ade_arrangement(t, strict);
    for (int i = 0; i < t.rank; ++i) out["exceptional_coefficients"].push_back(to_string(arr.components[i].coefficient));
    return {0, std::move(out)};
}

// {"type": "A6", "incidence": [0,1,0,0,0,0]} or {"type", "curve": {...}};
// "with": {"curve": {...}, "strict_product": "-1"} adds an intersection number.
inline RunResult pullback(const json& p) {
    only_keys(p, {"type", "incidence", "curve", "with", "matrix"}, "pullback payload");
    DynkinType t = decode_dynkin(field(p, "type"));
    if (has(p, "incidence") == has(p, "curve"))
        throw SchemaError("pullback needs exactly one of 'incidence' or 'curve'");
    CurveClass c = has(p, "curve") ? decode_curve(p["curve"])
                                   : CurveClass{"L", 1, -1, decode_int_vector(p["incidence"], "incidence")};
    if (static_cast<int>(c.exc_intersections.size()) != t.rank)
        throw SchemaError("incidence has " + std::to_string(c.exc_intersections.size()) + " entries, " +
                          t.name() + " needs " + std::to_string(t.rank));
    PullbackCoefficients n = pullback_coefficients(t, c.exc_intersections);
    json out = encode(n);
    if (has(p, "matrix") && get_bool(p["matrix"], "matrix")) out["matrix"] = encode(intersection_matrix(t));
    if (has(p, "with")) {
        const json& w = p["with"];
        only_keys(w, {"curve", "strict_product"}, "with");
        CurveClass other = decode_curve(field(w, "curve"));
        if (static_cast<int>(other.exc_intersections.size()) != t.rank)
            throw SchemaError("second curve has the wrong number of incidences");
        out["intersection"] =
            to_string(intersection_number(c, n, other, decode_rational(field(w, "strict_product"), "strict_product")));
    }
    return {0, std::move(out)};
}

// {"op": "maximize"|"minimize"|"fm_maximize"|"is_implied"|"eliminate"|"feasible",
//  "system": {...} or "base_system": "A4", "objective": row, "inequality": row,
//  "variable": name}
inline RunResult polytope(const json& p) {
    only_keys(p, {"op", "system", "base_system", "objective", "inequality", "variable"}, "polytope payload");
    std::string op = get_string(field(p, "op"), "op");
    if (has(p, "system") == has(p, "base_system"))
        throw SchemaError("polytope needs exactly one of 'system' or 'base_system'");
    LinIneqSystem sys = has(p, "system") ? decode_system(p["system"]) : base_system(decode_dynkin(p["base_system"]));
    json out{{"op", op}, {"variables", sys.variables()}};
    if (op == "maximize" || op == "minimize" || op == "fm_maximize") {
        Vector c = decode_row(field(p, "objective"), sys.variables());
        if (op == "fm_maximize") {
            FMResult r = fm_maximize(sys, c);
            out["status"] = status_name(r.status);
            if (r.status == LPStatus::Optimal) out["value"] = to_string(r.value);
        } else {
            LPResult r = op == "maximize" ? maximize(sys, c) : minimize(sys, c);
            out.update(encode(r));
        }
    } else if (op == "is_implied") {
        Constraint ineq = decode_constraint(field(p, "inequality"), sys.variables());
        if (ineq.rel != Relation::GE) throw SchemaError("is_implied takes a GE inequality");
        out.update(encode(is_implied(sys, ineq)));
    } else if (op == "eliminate") {
        std::string v = get_string(field(p, "variable"), "variable");
        if (!sys.has_variable(v)) throw SchemaError("unknown variable '" + v + "'");
        out["system"] = encode(eliminate(sys, v));
    } else if (op == "feasible") {
        auto x = feasible_point(sys);
        out["feasible"] = x.has_value();
        if (x) out["point"] = encode(*x);
    } else if (op == "system") {
        out["system"] = encode(sys);
    } else {
        throw SchemaError("unknown polytope op '" + op + "'");
    }
    return {0, std::move(out)};
}

// {"params": {...}} or {"dimitra": m}; optional "a1", "a2" for the full
// hypothesis list and "mults" for the blow-up tower.
inline RunResult theorem_i(const json& p) {
    only_keys(p, {"params", "dimitra", "a1", "a2", "mults"}, "theorem-i payload");
    if (has(p, "params") == has(p, "dimitra")) throw SchemaError("theorem-i needs exactly one of 'params' or 'dimitra'");
    TheoremIParams params;
    if (has(p, "dimitra")) {
        long long m = get_int(p["dimitra"], "dimitra");
        if (m < 3) throw SchemaError("dimitra requires m >= 3");
        params = dimitra_params(m);
    } else {
        params = decode_params(p["params"]);
    }
    json out{{"params", encode(params)},
             {"parameter_bullets", encode(parameter_bullets(params))},
             {"parameter_bullets_hold", check_parameter_bullets(params)}};
    if (has(p, "a1") != has(p, "a2")) throw SchemaError("'a1' and 'a2' go together");
    if (has(p, "a1")) {
        Rational a1 = decode_rational(p["a1"], "a1"), a2 = decode_rational(p["a2"], "a2");
        out["hypotheses"] = encode(hypothesis_bullets(params, a1, a2));
        out["hypotheses_hold"] = check_hypotheses(params, a1, a2);
        if (a2 < 1) out["chain_bound"] = to_string(chain_bound(params, a2));
        if (has(p, "mults")) {
            ChainState s = simulate_chain(a1, a2, decode_vector(p["mults"], "mults"));
            out["chain"] = json{{"coefficients", encode(s.coeffs)}, {"violations", s.violations}};
        }
    } else if (has(p, "mults")) {
        throw SchemaError("'mults' needs 'a1' and 'a2'");
    }
    out["lemma"] = encode(verify_lemma_2_0(params));
    return {0, std::move(out)};
}

// {"builtin": "cusp"} or {"branches": [...], "steps": [...]}
inline RunResult germ(const json& p) {
    only_keys(p, {"builtin", "branches", "steps"}, "germ payload");
    std::vector<Branch> branches;
    BlowupProgram prog;
    std::string name;
    if (has(p, "builtin")) {
        if (has(p, "branches") || has(p, "steps")) throw SchemaError("'builtin' cannot be combined with a program");
        name = get_string(p["builtin"], "builtin");
        const Germ& g = builtin_germ(name);
        branches = g.branches;
        prog = g.program;
    } else {
        branches = decode_branches(field(p, "branches"));
        prog = decode_program(field(p, "steps"));
    }
    WeightedArrangement arr = run_program(branches, prog);
    json out = encode(lct_snc(arr));
    if (!name.empty()) out["germ"] = name;
    out["table"] = encode(arr);
    return {0, std::move(out)};
}

}  // namespace detail

// Validation problems give exit 1, a failed certification exit 2.
inline RunResult run(const RunRequest& req) {
    try {
        const json& p = req.payload;
        if (!p.is_object()) throw SchemaError("payload must be a JSON object");
        if (req.subcommand == "table") return detail::table(p);
        if (req.subcommand == "certify") return detail::certify(p);
        if (req.subcommand == "lct") return detail::lct(p);
        if (req.subcommand == "pullback") return detail::pullback(p);
        if (req.subcommand == "polytope") return detail::polytope(p);
        if (req.subcommand == "theorem-i") return detail::theorem_i(p);
        if (req.subcommand == "germ") return detail::germ(p);
        throw SchemaError("unknown subcommand '" + req.subcommand + "'");
    } catch (const std::invalid_argument& e) {
        return {1, json{{"error", e.what()}}};
    } catch (const std::domain_error& e) {
        return {1, json{{"error", e.what()}}};
    } catch (const std::exception& e) {
        return {2, json{{"error", e.what()}}};
    }
}

}  // namespace lct::cli
