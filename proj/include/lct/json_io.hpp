#pragma once

#include "lct/catalog.hpp"
#include "lct/lct.hpp"
#include "lct/local.hpp"
#include "lct/polytope.hpp"
#include "lct/rational.hpp"
#include "lct/resolution.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

// JSON encoding of library values. Rationals are always "p/q" strings in
// lowest terms; decoders accept "p/q" or a bare integer string.
namespace lct::json_io {

using json = nlohmann::ordered_json;

// Raised for any payload that does not match the documented shape.
struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Field access

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

inline bool has(const json& j, const char* key) { return j.is_object() && j.contains(key); }

inline std::string get_string(const json& j, const char* what) {
    if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline long long get_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

inline bool get_bool(const json& j, const char* what) {
    if (!j.is_boolean()) throw SchemaError(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

inline const json& get_array(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
    return j;
}

inline void only_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) throw SchemaError(std::string(what) + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || it.key() == k;
        if (!ok) throw SchemaError(std::string("unexpected field '") + it.key() + "' in " + what);
    }
}

// ---------------------------------------------------------------------------
// Rationals

inline json encode(const Rational& r) { return to_string(r); }

inline json encode(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline Rational decode_rational(const json& j, const char* what = "rational") {
    if (!j.is_string()) throw SchemaError(std::string(what) + " must be a \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string(what) + ": " + e.what() + " '" + j.get<std::string>() + "'");
    }
}

inline Vector decode_vector(const json& j, const char* what = "vector") {
    get_array(j, what);
    Vector out;
    for (const auto& x : j) out.push_back(decode_rational(x, what));
    return out;
}

inline std::vector<int> decode_int_vector(const json& j, const char* what) {
    get_array(j, what);
    std::vector<int> out;
    for (const auto& x : j) out.push_back(static_cast<int>(get_int(x, what)));
    return out;
}

// ---------------------------------------------------------------------------
// resolution

inline json encode(const DynkinType& t) {
    return json{{"kind", std::string(1, kind_letter(t.kind))}, {"rank", t.rank}};
}

// Accepts {"kind": "A", "rank": 7} or the short form "A7".
inline DynkinType decode_dynkin(const json& j) {
    try {
        if (j.is_string()) return DynkinType::parse(j.get<std::string>());
        only_keys(j, {"kind", "rank"}, "Dynkin type");
        std::string kind = get_string(field(j, "kind"), "kind");
        long long rank = get_int(field(j, "rank"), "rank");
        return DynkinType::parse(kind + std::to_string(rank));
    } catch (const SchemaError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

inline json encode(const IntersectionMatrix& m) { return json(m.rows()); }

inline json encode(const CurveClass& c) {
    return json{{"name", c.name},
                {"anticanonical_degree", to_string(c.anticanonical_degree)},
                {"self_intersection_strict", to_string(c.self_intersection_strict)},
                {"exc_intersections", c.exc_intersections}};
}

inline CurveClass decode_curve(const json& j) {
    only_keys(j, {"name", "anticanonical_degree", "self_intersection_strict", "exc_intersections"}, "curve");
    CurveClass c;
    c.name = get_string(field(j, "name"), "name");
    if (has(j, "anticanonical_degree"))
        c.anticanonical_degree = decode_rational(j["anticanonical_degree"], "anticanonical_degree");
    if (has(j, "self_intersection_strict"))
        c.self_intersection_strict = decode_rational(j["self_intersection_strict"], "self_intersection_strict");
    c.exc_intersections = decode_int_vector(field(j, "exc_intersections"), "exc_intersections");
    for (int b : c.exc_intersections)
        if (b < 0) throw SchemaError("exc_intersections must be non-negative");
    return c;
}

inline json encode(const PullbackCoefficients& p) {
    return json{{"type", encode(p.type)}, {"coeffs", encode(p.coeffs)}};
}

inline PullbackCoefficients decode_pullback(const json& j) {
    only_keys(j, {"type", "coeffs"}, "pullback coefficients");
    return {decode_dynkin(field(j, "type")), decode_vector(field(j, "coeffs"), "coeffs")};
}

// ---------------------------------------------------------------------------
// polytope

inline const char* relation_name(Relation r) { return r == Relation::GE ? "GE" : "EQ"; }

inline json encode(const LinIneqSystem& sys) {
    json cs = json::array();
    for (const auto& c : sys.constraints()) {
        json row{{"coeffs", encode(c.coeffs)}, {"relation", relation_name(c.rel)}, {"rhs", to_string(c.rhs)}};
        if (!c.label.empty()) row["label"] = c.label;
        cs.push_back(std::move(row));
    }
    return json{{"variables", sys.variables()}, {"constraints", std::move(cs)}};
}

inline Relation decode_relation(const json& j) {
    std::string r = get_string(j, "relation");
    if (r == "GE" || r == ">=") return Relation::GE;
    if (r == "EQ" || r == "=") return Relation::EQ;
    throw SchemaError("relation must be \"GE\" or \"EQ\", got '" + r + "'");
}

// A row is either {"coeffs": [...]} aligned with the variables or
// {"terms": {"a1": "2", ...}} keyed by variable name.
inline Vector decode_row(const json& j, const std::vector<std::string>& vars) {
    if (has(j, "coeffs") == has(j, "terms")) throw SchemaError("a row needs exactly one of 'coeffs' or 'terms'");
    if (has(j, "coeffs")) {
        Vector v = decode_vector(j["coeffs"], "coeffs");
        if (v.size() != vars.size())
            throw SchemaError("row has " + std::to_string(v.size()) + " coefficients, expected " +
                              std::to_string(vars.size()));
        return v;
    }
    const json& t = j["terms"];
    if (!t.is_object()) throw SchemaError("terms must be an object");
    Vector v(vars.size(), Rational(0));
    for (auto it = t.begin(); it != t.end(); ++it) {
        auto pos = std::find(vars.begin(), vars.end(), it.key());
        if (pos == vars.end()) throw SchemaError("unknown variable '" + it.key() + "'");
        v[static_cast<std::size_t>(pos - vars.begin())] += decode_rational(it.value(), "term");
    }
    return v;
}

inline Constraint decode_constraint(const json& j, const std::vector<std::string>& vars) {
    only_keys(j, {"coeffs", "terms", "relation", "rhs", "label"}, "constraint");
    Constraint c;
    c.coeffs = decode_row(j, vars);
    c.rel = has(j, "relation") ? decode_relation(j["relation"]) : Relation::GE;
    c.rhs = decode_rational(field(j, "rhs"), "rhs");
    if (has(j, "label")) c.label = get_string(j["label"], "label");
    return c;
}

inline LinIneqSystem decode_system(const json& j) {
    only_keys(j, {"variables", "constraints"}, "system");
    std::vector<std::string> vars;
    for (const auto& v : get_array(field(j, "variables"), "variables")) vars.push_back(get_string(v, "variable"));
    LinIneqSystem sys;
    try {
        sys = LinIneqSystem(vars);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    for (const auto& c : get_array(field(j, "constraints"), "constraints")) sys.add(decode_constraint(c, vars));
    return sys;
}

inline json encode(const FarkasCertificate& c) { return json{{"multipliers", encode(c.multipliers)}}; }

inline FarkasCertificate decode_certificate(const json& j) {
    only_keys(j, {"multipliers"}, "certificate");
    return {decode_vector(field(j, "multipliers"), "multipliers")};
}

inline json encode(const LPResult& r) {
    json out{{"status", status_name(r.status)}};
    if (r.optimal()) {
        out["value"] = to_string(r.value);
        out["witness"] = encode(r.witness);
        out["dual"] = encode(r.dual);
    }
    if (r.certificate) out["certificate"] = encode(*r.certificate);
    return out;
}

inline json encode(const ImplicationResult& r) {
    json out{{"implied", r.implied}};
    if (r.certificate) out["certificate"] = encode(*r.certificate);
    if (r.counterexample) out["counterexample"] = encode(*r.counterexample);
    return out;
}

// ---------------------------------------------------------------------------
// local

inline json encode(const TheoremIParams& p) {
    return json{{"A", to_string(p.A)},         {"B", to_string(p.B)},
                {"M", to_string(p.M)},         {"N", to_string(p.N)},
                {"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}};
}

inline TheoremIParams decode_params(const json& j) {
    only_keys(j, {"A", "B", "M", "N", "alpha", "beta"}, "parameters");
    TheoremIParams p{decode_rational(field(j, "A"), "A"),         decode_rational(field(j, "B"), "B"),
                     decode_rational(field(j, "M"), "M"),         decode_rational(field(j, "N"), "N"),
                     decode_rational(field(j, "alpha"), "alpha"), decode_rational(field(j, "beta"), "beta")};
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    return p;
}

inline json encode(const std::vector<BulletReport>& bullets) {
    json out = json::array();
    for (const auto& b : bullets) out.push_back(json{{"name", b.name}, {"holds", b.holds}});
    return out;
}

inline const char* lemma_status_name(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::Holds: return "holds";
        case LemmaStatus::PreconditionViolated: return "precondition_violated";
        case LemmaStatus::ConclusionFailed: return "conclusion_failed";
    }
    return "?";
}

inline json encode(const Lemma20Report& r) {
    return json{{"status", lemma_status_name(r.status)},
                {"preconditions", encode(r.preconditions)},
                {"conclusions", encode(r.conclusions)}};
}

// ---------------------------------------------------------------------------
// lct

inline json encode(const LctResult& r) {
    json out{{"lct", r.infinite ? json("infinite") : json(to_string(r.value))}};
    if (!r.infinite) out["minimizer"] = r.minimizer;
    return out;
}

inline json encode(const WeightedArrangement& arr) {
    json out = json::array();
    for (const auto& c : arr.components)
        out.push_back(json{{"id", c.id},
                           {"kind", c.kind == ComponentKind::Strict ? "strict" : "exceptional"},
                           {"d", to_string(c.coefficient)},
                           {"k", to_string(c.discrepancy)}});
    return out;
}

inline json encode(const BlowupProgram& p) {
    json steps = json::array();
    for (const auto& s : p.steps) {
        json br = json::array();
        for (const auto& b : s.branches) br.push_back(json{{"branch", b.branch}, {"multiplicity", b.multiplicity}});
        steps.push_back(json{{"id", s.id}, {"exceptionals", s.exceptionals}, {"branches", std::move(br)},
                             {"transverse", s.transverse}});
    }
    return json{{"steps", std::move(steps)}};
}

inline std::vector<Branch> decode_branches(const json& j) {
    std::vector<Branch> out;
    for (const auto& b : get_array(j, "branches")) {
        only_keys(b, {"id", "coefficient"}, "branch");
        Branch br;
        br.id = get_string(field(b, "id"), "branch id");
        if (has(b, "coefficient")) br.coefficient = decode_rational(b["coefficient"], "coefficient");
        out.push_back(std::move(br));
    }
    return out;
}

inline BlowupProgram decode_program(const json& j) {
    const json& steps = has(j, "steps") ? j["steps"] : j;
    BlowupProgram p;
    for (const auto& s : get_array(steps, "steps")) {
        only_keys(s, {"id", "exceptionals", "branches", "transverse"}, "step");
        BlowupStep step;
        if (has(s, "id")) step.id = get_string(s["id"], "step id");
        if (has(s, "exceptionals"))
            for (const auto& e : get_array(s["exceptionals"], "exceptionals"))
                step.exceptionals.push_back(get_string(e, "exceptional"));
        if (has(s, "branches"))
            for (const auto& b : get_array(s["branches"], "branches")) {
                only_keys(b, {"branch", "multiplicity"}, "branch incidence");
                BranchIncidence bi;
                bi.branch = get_string(field(b, "branch"), "branch");
                if (has(b, "multiplicity")) bi.multiplicity = static_cast<int>(get_int(b["multiplicity"], "multiplicity"));
                step.branches.push_back(std::move(bi));
            }
        if (has(s, "transverse")) step.transverse = get_bool(s["transverse"], "transverse");
        p.steps.push_back(std::move(step));
    }
    return p;
}

// ---------------------------------------------------------------------------
// catalog

inline json encode(const SurfaceFlags& f) {
    return json{{"r_reducible", !f.branch_R_irreducible}, {"cusp", cusp_name(f.cusp)}};
}

inline json encode(const WitnessDivisor& w) {
    json comps = json::array();
    for (const auto& c : w.components)
        comps.push_back(json{{"curve", encode(c.curve)}, {"multiplicity", c.multiplicity}});
    json out{{"name", w.name},
             {"pluri_degree", w.pluri_degree},
             {"point", w.at_point},
             {"type", encode(w.type)},
             {"components", std::move(comps)},
             {"claimed", to_string(w.claimed)},
             {"coefficients", encode(w.coefficients())}};
    if (w.germ) out["germ"] = encode(*w.germ);
    return out;
}

inline json encode_row(const std::string& config, const SurfaceFlags& flags, const TableRow& row) {
    json out{{"config", config}, {"flags", encode(flags)}, {"lct", to_string(row.value)}, {"level", row.level}};
    if (row.witness) {
        out["witness"] = row.witness->name;
        out["pluri_degree"] = row.witness->pluri_degree;
        out["witness_coefficients"] = encode(row.witness->coefficients());
        out["witness_detail"] = encode(*row.witness);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

inline json encode(const Certification& c, bool with_system = true) {
    json out{{"id", c.scenario.id},
             {"point", c.scenario.point},
             {"type", encode(c.scenario.type)},
             {"candidate", c.scenario.candidate},
             {"lemmas", c.scenario.lemmas},
             {"target_mu", to_string(c.scenario.target_mu)},
             {"bound_u", to_string(c.bound)},
             {"max_u", encode(c.max_u)},
             {"closure", closure_name(c.closure)},
             {"passed", c.passed}};
    if (c.closure_certificate) out["closure_certificate"] = encode(*c.closure_certificate);
    if (with_system) out["system"] = encode(c.scenario.system);
    return out;
}

inline json encode(const CertifyReport& r, bool with_systems = true) {
    json certs = json::array();
    for (const auto& c : r.certifications) certs.push_back(encode(c, with_systems));
    json out{{"config", r.configuration},
             {"flags", encode(r.flags)},
             {"lct", to_string(r.row.value)},
             {"level", r.row.level},
             {"passed", r.passed()},
             {"scenarios", std::move(certs)}};
    if (r.notice) out["notice"] = *r.notice;
    return out;
}

}  // namespace lct::json_io
