#pragma once

// Command-line front end. `run` is the whole tool; main() only forwards.
//
// exit codes: 0 ok, 1 query not entailed / check found differences,
//             2 input error, 3 cap exceeded

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dmtl/dmtl.hpp"

namespace dmtl::cli {

enum ExitCode { kOk = 0, kFalse = 1, kInputError = 2, kCapExceeded = 3 };

struct RunConfig {
    std::string command;
    std::string program_path;
    std::string database_path;
    std::string horizon;
    std::string query;
    std::string format = "human";
    std::size_t cycle_cap = kDefaultCycleCap;
    std::size_t window_cap = kDefaultWindowCap;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

inline Program load_program(const RunConfig& cfg) {
    if (cfg.program_path.empty()) throw InputError("--program is required");
    try {
        return parse_program(read_file(cfg.program_path));
    } catch (const ParseError& e) {
        throw InputError(cfg.program_path + ":" + e.what());
    }
}

inline Database load_database(const RunConfig& cfg) {
    if (cfg.database_path.empty()) return {};
    try {
        return parse_database(read_file(cfg.database_path));
    } catch (const ParseError& e) {
        throw InputError(cfg.database_path + ":" + e.what());
    }
}

inline bool json_output(const RunConfig& cfg) { return cfg.format == "json"; }

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline Rational default_check_horizon(const Database& d, const Rational& p) {
    return max_time_point(d).value_or(Rational(0)) + 3 * p;
}

}  // namespace detail

inline int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    Program p = to_normal_form(detail::load_program(cfg));
    ClassifyOptions opts;
    opts.cycle_cap = cfg.cycle_cap;
    for (const auto& [atom, set] : detail::load_database(cfg)) opts.database_predicates.insert(atom.predicate);
    auto rep = classify_rules(p, opts);
    if (detail::json_output(cfg)) detail::print_json(out, to_json(rep, p));
    else out << render_human(rep, p);
    return kOk;
}

inline int cmd_reason(const RunConfig& cfg, std::ostream& out) {
    auto pm = reason(detail::load_program(cfg), detail::load_database(cfg), {cfg.cycle_cap, cfg.window_cap});
    if (detail::json_output(cfg)) detail::print_json(out, to_json(pm));
    else out << render_human(pm);
    return kOk;
}

inline int cmd_query(const RunConfig& cfg, std::ostream& out) {
    if (cfg.query.empty()) throw InputError("--query is required");
    Fact q = parse_fact(cfg.query);
    auto pm = reason(detail::load_program(cfg), detail::load_database(cfg), {cfg.cycle_cap, cfg.window_cap});
    bool yes = entails(pm, q);
    if (detail::json_output(cfg)) detail::print_json(out, Json{{"query", to_string(q)}, {"entailed", yes}});
    else out << (yes ? "true" : "false") << "\n";
    return yes ? kOk : kFalse;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    if (cfg.horizon.empty()) throw InputError("--horizon is required");
    TimePoint h = parse_time_point(cfg.horizon);
    Model m = naive_fixpoint_bounded(detail::load_program(cfg), detail::load_database(cfg), h);
    if (detail::json_output(cfg)) detail::print_json(out, Json{{"horizon", to_string(h)}, {"facts", facts_to_json(m)}});
    else out << render_human(m);
    return kOk;
}

/// Unrolled `reason` output vs. the oracle on (-inf, H].
inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
    Program p = detail::load_program(cfg);
    Database d = detail::load_database(cfg);
    auto pm = reason(p, d, {cfg.cycle_cap, cfg.window_cap});
    Rational h = cfg.horizon.empty() ? detail::default_check_horizon(d, pm.period) : parse_rational(cfg.horizon);
    Interval window(TimePoint::neg_infinity(), true, TimePoint(h), false);
    Model mine = unroll(pm, window);
    Model truth = naive_fixpoint_bounded(p, d, TimePoint(h));
    std::set<GroundAtom> atoms;
    for (const auto& [a, s] : mine) atoms.insert(a);
    for (const auto& [a, s] : truth) atoms.insert(a);
    Json diffs = Json::array();
    for (const auto& a : atoms)
        if (!(mine.at(a) == truth.at(a)))
            diffs.push_back({{"atom", to_string(a)}, {"reason", to_string(mine.at(a))}, {"oracle", to_string(truth.at(a))}});
    if (detail::json_output(cfg)) {
        detail::print_json(out, Json{{"horizon", format_rational(h)}, {"differences", diffs}});
    } else {
        out << "horizon: " << format_rational(h) << "\n";
        for (const auto& dj : diffs)
            out << "differs: " << dj["atom"].get<std::string>() << "  reason " << dj["reason"].get<std::string>()
                << "  oracle " << dj["oracle"].get<std::string>() << "\n";
        out << diffs.size() << " difference(s)\n";
    }
    return diffs.empty() ? kOk : kFalse;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "reason") return cmd_reason(cfg, out);
    if (cfg.command == "query") return cmd_query(cfg, out);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out);
    if (cfg.command == "check") return cmd_check(cfg, out);
    throw InputError("unknown command '" + cfg.command + "'");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"DatalogMTL reasoner: rule classification, periodic models, entailment"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub, bool needs_db) {
        sub->add_option("--program", cfg.program_path, "program file")->required();
        auto* db = sub->add_option("--database", cfg.database_path, "database file");
        if (needs_db) db->required();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"human", "json"}));
        sub->add_option("--cycle-cap", cfg.cycle_cap, "maximum number of simple cycles")->check(CLI::PositiveNumber);
    };
    auto add_window_cap = [&](CLI::App* sub) {
        sub->add_option("--window-cap", cfg.window_cap, "maximum number of windows per rule group")
            ->check(CLI::PositiveNumber);
    };
    auto* classify = app.add_subcommand("classify", "classify rules and report fragment flags");
    add_common(classify, false);
    auto* reason_cmd = app.add_subcommand("reason", "compute a finite representation of the model");
    add_common(reason_cmd, true);
    add_window_cap(reason_cmd);
    auto* query = app.add_subcommand("query", "decide whether a fact is entailed");
    add_common(query, true);
    add_window_cap(query);
    query->add_option("--query", cfg.query, "fact such as 'A@[1,2]'")->required();
    auto* oracle = app.add_subcommand("oracle", "naive fixpoint clipped to a horizon");
    add_common(oracle, true);
    oracle->add_option("--horizon", cfg.horizon, "right end of the window (number or inf)")->required();
    auto* check = app.add_subcommand("check", "compare reason against the oracle");
    add_common(check, true);
    add_window_cap(check);
    check->add_option("--horizon", cfg.horizon, "right end of the window (default: max database time + 3 periods)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    try {
        return dispatch(cfg, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace dmtl::cli
