#include "lct/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

namespace {

using lct::cli::json;

std::optional<json> read_payload(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) return std::nullopt;
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return json::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Log canonical thresholds of degree-1 del Pezzo surfaces with Du Val points"};
    app.require_subcommand(1);

    std::string input;
    bool pretty = false;
    std::string config, cusp, builtin;
    bool r_reducible = false, all = false, systems = false;
    long long dimitra = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", input, "payload file, '-' for stdin (default: stdin unless flags are given)");
        sub->add_flag("--pretty", pretty, "indent the output");
    };

    auto* table = app.add_subcommand("table", "lct row for a configuration");
    common(table);
    table->add_option("--config", config, "configuration, e.g. \"A7+A1\"");
    table->add_flag("--r-reducible", r_reducible, "the branch curve R is reducible");
    table->add_option("--cusp", cusp, "cusp stratum: none, smooth, a1, a2");

    auto* certify = app.add_subcommand("certify", "certify the lower bound by scenario LPs");
    common(certify);
    certify->add_option("--config", config, "configuration");
    certify->add_flag("--all", all, "sweep every admissible configuration");
    certify->add_flag("--r-reducible", r_reducible, "the branch curve R is reducible");
    certify->add_option("--cusp", cusp, "cusp stratum: none, smooth, a1, a2");
    certify->add_flag("--systems", systems, "embed the inequality systems");

    auto* germ = app.add_subcommand("germ", "evaluate a blow-up program");
    common(germ);
    germ->add_option("--builtin", builtin, "node, cusp, tacnode, triple_point, double_tacnode, cusp_and_line");

    auto* theorem = app.add_subcommand("theorem-i", "check the local inequality hypotheses");
    common(theorem);
    theorem->add_option("--dimitra", dimitra, "use the standard parameter family for this m");

    for (const char* name : {"lct", "pullback", "polytope"})
        common(app.add_subcommand(name, std::string(name) + " (JSON payload)"));

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();

    json payload = json::object();
    bool from_flags = !config.empty() || !cusp.empty() || r_reducible || all || systems || !builtin.empty() ||
                      dimitra != 0;
    try {
        if (!input.empty() || !from_flags) {
            auto p = read_payload(input.empty() ? "-" : input);
            if (!p) {
                std::cout << json{{"error", "cannot read '" + input + "'"}}.dump() << "\n";
                return 1;
            }
            payload = std::move(*p);
        }
    } catch (const json::parse_error& e) {
        std::cout << json{{"error", std::string("malformed JSON: ") + e.what()}}.dump() << "\n";
        return 1;
    }
    if (payload.is_object()) {
        if (!config.empty()) payload["config"] = config;
        if (!cusp.empty()) payload["cusp"] = cusp;
        if (r_reducible) payload["r_reducible"] = true;
        if (all) payload["all"] = true;
        if (systems) payload["systems"] = true;
        if (!builtin.empty()) payload["builtin"] = builtin;
        if (dimitra != 0) payload["dimitra"] = dimitra;
    }

    auto result = lct::cli::run({sub->get_name(), payload});
    std::cout << (pretty ? result.output.dump(2) : result.output.dump()) << "\n";
    return result.exit_code;
}
