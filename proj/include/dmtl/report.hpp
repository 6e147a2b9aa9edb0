#pragma once

// Human-readable and JSON renderings of analysis and reasoning results.
// Rationals are emitted as strings ("7", "3/2") so nothing is rounded.

#include <json.hpp>

#include <sstream>
#include <string>

#include "dmtl/classification.hpp"
#include "dmtl/periodic.hpp"
#include "dmtl/printer.hpp"

namespace dmtl {

using Json = nlohmann::ordered_json;

inline Json facts_to_json(const Model& m) {
    Json out = Json::array();
    for (const auto& f : m.facts()) out.push_back({{"atom", to_string(f.atom)}, {"interval", to_string(f.interval)}});
    return out;
}

inline Json to_json(const FragmentReport& rep, const Program& p) {
    Json nodes = Json::array();
    for (std::size_t v = 0; v < rep.nodes.size(); ++v)
        nodes.push_back({{"node", rep.nodes[v]}, {"finite", static_cast<bool>(rep.finite[v])},
                         {"case", to_string(rep.finite_case[v])}});
    Json rules = Json::array();
    for (std::size_t i = 0; i < p.rules.size(); ++i)
        rules.push_back({{"id", p.rules[i].id}, {"rule", to_string(p.rules[i])}, {"class", to_string(rep.rule_classes[i])}});
    Json cycles = Json::array();
    for (const auto& c : rep.cycles)
        cycles.push_back({{"nodes", c.nodes}, {"interval_weight", to_string(c.interval_weight)},
                          {"shift_sum", to_string(c.shift_sum)}});
    return Json{{"flags",
                 {{"bounded", rep.flags.bounded},
                  {"union_free", rep.flags.union_free},
                  {"temporal_linear", rep.flags.temporal_linear},
                  {"forward_propagating", rep.flags.forward_propagating}}},
                {"harmless_program", rep.harmless_program},
                {"pattern_length", format_rational(rep.pattern_length)},
                {"nodes", nodes},
                {"rules", rules},
                {"cycles", cycles},
                {"warnings", rep.warnings}};
}

inline Json to_json(const PeriodicModel& pm) {
    Json patterns = Json::array();
    for (const auto& pat : pm.patterns)
        patterns.push_back({{"atom", to_string(pat.atom)},
                            {"offset", to_string(pat.offset)},
                            {"period", format_rational(pat.period)},
                            {"start_index", pat.start_index.str()}});
    return Json{{"type", to_string(pm.type())},
                {"period", format_rational(pm.period)},
                {"horizon", format_rational(pm.horizon)},
                {"facts", facts_to_json(pm.facts)},
                {"patterns", patterns}};
}

inline std::string render_human(const FragmentReport& rep, const Program& p) {
    std::ostringstream os;
    os << "nodes:\n";
    for (std::size_t v = 0; v < rep.nodes.size(); ++v)
        os << "  " << rep.nodes[v] << "  " << (rep.finite[v] ? "finite" : "not finite")
           << (rep.finite[v] ? std::string(" (") + to_string(rep.finite_case[v]) + ")" : "") << "\n";
    os << "rules:\n";
    for (std::size_t i = 0; i < p.rules.size(); ++i)
        os << "  " << p.rules[i].id << "  " << to_string(rep.rule_classes[i]) << "  " << to_string(p.rules[i]) << "\n";
    os << "cycles:\n";
    for (const auto& c : rep.cycles) {
        os << "  ";
        for (const auto& n : c.nodes) os << n << " -> ";
        os << c.nodes.front() << "  weight " << to_string(c.interval_weight) << "  shift " << to_string(c.shift_sum)
           << "\n";
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "bounded: " << yn(rep.flags.bounded) << "\n"
       << "union-free: " << yn(rep.flags.union_free) << "\n"
       << "temporal-linear: " << yn(rep.flags.temporal_linear) << "\n"
       << "forward-propagating: " << yn(rep.flags.forward_propagating) << "\n"
       << "harmless program: " << yn(rep.harmless_program) << "\n"
       << "pattern length: " << format_rational(rep.pattern_length) << "\n";
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    return os.str();
}

inline std::string render_human(const PeriodicModel& pm) {
    std::ostringstream os;
    os << "type: " << to_string(pm.type()) << "\n"
       << "period: " << format_rational(pm.period) << "\n"
       << "horizon: " << format_rational(pm.horizon) << "\n"
       << "facts:\n";
    for (const auto& f : pm.facts.facts()) os << "  " << to_string(f) << "\n";
    os << "patterns:\n";
    for (const auto& pat : pm.patterns) os << "  " << to_string(pat) << "\n";
    return os.str();
}

inline std::string render_human(const Model& m) {
    std::ostringstream os;
    for (const auto& f : m.facts()) os << to_string(f) << "\n";
    return os.str();
}

}  // namespace dmtl
