// Command-line front end: loads one model file, runs one check against one
// named entry, prints the report, and exits 0 (pass), 1 (fail) or 2 (bad
// input).  The target name may be omitted when the model declares exactly
// one eligible entry.

#include "liedouble/doubles.hpp"
#include "liedouble/model.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace liedouble;

namespace {

// Resolve `target` against candidate names; empty target is allowed when
// there is exactly one candidate.  Returns the chosen name or "" after
// printing a usage error.
std::string choose(const std::vector<std::string>& names, std::string target,
                   const std::string& kind) {
    if (target.empty()) {
        if (names.size() == 1) return names.front();
        if (names.empty()) {
            std::cerr << "model declares no " << kind << "s\n";
            return "";
        }
        std::cerr << "model declares several " << kind
                  << "s, name one:";
        for (const auto& n : names) std::cerr << " " << n;
        std::cerr << "\n";
        return "";
    }
    for (const auto& n : names)
        if (n == target) return target;
    std::cerr << "unknown " << kind << " \"" << target << "\"; model declares:";
    for (const auto& n : names) std::cerr << " " << n;
    std::cerr << "\n";
    return "";
}

std::vector<std::string> keys_of(const std::map<std::string, MatchedPair>& a,
                                 const std::map<std::string, MatchedPair>& b) {
    std::vector<std::string> out;
    for (const auto& [k, v] : a) {
        (void)v;
        out.push_back(k);
    }
    for (const auto& [k, v] : b) {
        (void)v;
        out.push_back(k);
    }
    return out;
}

int emit(const Report& r, const std::string& format) {
    std::cout << (format == "json" ? render_json(r) : render_text(r));
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic verification of double structures over polynomial models"};
    app.require_subcommand(1);

    std::string model_path;
    std::string target;
    std::string format = "text";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("model", model_path, "model file (JSON)")->required();
        sub->add_option("target", target,
                        "named entry; optional when the model has exactly one");
        sub->add_option("--format", format, "report format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        return sub;
    };

    CLI::App* cmd_alg = add_common(app.add_subcommand(
        "check-algebroid", "Lie algebroid axioms for one declared algebroid"));
    CLI::App* cmd_rep = add_common(app.add_subcommand(
        "check-tworep", "two-term representation conditions for one entry"));
    CLI::App* cmd_matched = add_common(app.add_subcommand(
        "check-matched", "conditions M1-M9 for a matched pair or tangent double"));
    CLI::App* cmd_bialg = add_common(app.add_subcommand(
        "check-bialgebroid", "conditions B1-B3 through the dual pair"));
    CLI::App* cmd_oracle = add_common(app.add_subcommand(
        "oracle", "run both checks and compare their verdicts"));
    CLI::App* cmd_tangent = add_common(app.add_subcommand(
        "tangent-double", "matched-pair conditions for an assembled tangent double"));
    CLI::App* cmd_core = add_common(app.add_subcommand(
        "core-algebroid", "Lie algebroid axioms for a pair's induced core"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 returns 0 for --help; anything else is a usage error.
        return app.exit(e) == 0 ? 0 : 2;
    }

    Model m;
    try {
        m = load_model(model_path);
    } catch (const ModelError& e) {
        for (const auto& d : e.diagnostics())
            std::cerr << d.where << ": " << d.message << "\n";
        return 2;
    }

    if (app.got_subcommand(cmd_alg)) {
        // The implicit tangent algebroid answers to "TM" but never competes
        // with declared entries when the target is left to default.
        std::vector<std::string> names;
        for (const auto& [k, v] : m.algebroids) {
            (void)v;
            if (!target.empty() || k != "TM") names.push_back(k);
        }
        const std::string name = choose(names, target, "algebroid");
        if (name.empty()) return 2;
        return emit(check_lie_algebroid(*m.algebroids.at(name)), format);
    }
    if (app.got_subcommand(cmd_rep)) {
        std::vector<std::string> names;
        for (const auto& [k, v] : m.tworeps) {
            (void)v;
            names.push_back(k);
        }
        const std::string name = choose(names, target, "tworep");
        if (name.empty()) return 2;
        return emit(validate_tworep(m.tworeps.at(name)), format);
    }
    if (app.got_subcommand(cmd_tangent)) {
        const std::string name =
            choose(keys_of(m.tangent_doubles, {}), target, "tangent input");
        if (name.empty()) return 2;
        return emit(check_matched(m.tangent_doubles.at(name)), format);
    }

    // The remaining commands accept declared pairs and tangent doubles alike.
    const std::string name =
        choose(keys_of(m.matched_pairs, m.tangent_doubles), target, "pair");
    if (name.empty()) return 2;
    const MatchedPair& mp = *m.find_pair(name);

    if (app.got_subcommand(cmd_matched)) return emit(check_matched(mp), format);
    if (app.got_subcommand(cmd_bialg)) return emit(check_bialgebroid(mp), format);
    if (app.got_subcommand(cmd_core))
        return emit(check_lie_algebroid(core_algebroid(mp)), format);

    if (app.got_subcommand(cmd_oracle)) {
        const OracleResult o = oracle_equivalence(mp);
        std::cout << (format == "json"
                          ? render_oracle_json(o.matched, o.bialgebroid, o.agree)
                          : render_oracle_text(o.matched, o.bialgebroid, o.agree));
        return o.pass ? 0 : 1;
    }
    return 2;
}
