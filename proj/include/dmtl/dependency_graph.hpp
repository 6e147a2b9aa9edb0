#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmtl/ast.hpp"
#include "dmtl/model.hpp"
#include "dmtl/printer.hpp"

namespace dmtl {

/// Node identity: predicates (default) or ground atoms.
enum class NodeMode { Predicate, GroundAtom };

struct DepEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t rule = 0;  // index into Program::rules
    std::string rule_id;
    bool special = false;
    Interval interval_label = Interval::point(0);
    TimePoint shift_label = 0;
};

struct DepGraph {
    std::vector<std::string> nodes;  // sorted
    std::vector<DepEdge> edges;      // rule order, then body order

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), name);
        if (it == nodes.end() || *it != name) return std::nullopt;
        return static_cast<std::size_t>(it - nodes.begin());
    }
    std::size_t index(const std::string& name) const {
        auto i = find(name);
        if (!i) throw InputError("unknown graph node '" + name + "'");
        return *i;
    }
};

inline std::string node_name(const Atom& a, NodeMode mode) {
    return mode == NodeMode::Predicate ? a.predicate : to_string(a);
}

namespace detail {

/// interval_label and shift_label for edges of a rule of shape `form`.
/// The shift is always one endpoint of the label: the earliest delay for
/// diamonds and since, the full window for boxes, mirrored for future
/// operators.
inline std::pair<Interval, TimePoint> edge_labels(const Rule& r, RuleForm form) {
    if (form == RuleForm::Horn) return {Interval::point(0), TimePoint(0)};
    const Interval& rho = r.body.front().range();
    switch (form) {
        case RuleForm::DiamondMinus:
        case RuleForm::Since: return {rho, rho.lo()};
        case RuleForm::BoxMinus: return {rho, rho.hi()};
        case RuleForm::DiamondPlus:
        case RuleForm::Until: return {negate(rho), -rho.lo()};
        case RuleForm::BoxPlus: return {negate(rho), -rho.hi()};
        default: return {Interval::point(0), TimePoint(0)};
    }
}

}  // namespace detail

/// Dependency graph of a normal-form program. One edge per (body atom, head,
/// rule); duplicate body atoms collapse into one edge.
inline DepGraph dependency_graph(const Program& p, NodeMode mode = NodeMode::Predicate) {
    DepGraph g;
    std::set<std::string> names;
    for (const auto& r : p.rules) {
        if (!form_of(r)) throw FragmentError("rule '" + to_string(r) + "' is not in normal form");
        for (const auto& a : body_atoms(r)) names.insert(node_name(a, mode));
        names.insert(node_name(r.head.as_atom(), mode));
    }
    g.nodes.assign(names.begin(), names.end());
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
        const Rule& r = p.rules[ri];
        RuleForm form = *form_of(r);
        auto [label, shift] = detail::edge_labels(r, form);
        std::size_t to = g.index(node_name(r.head.as_atom(), mode));
        std::set<std::size_t> seen;
        for (const auto& a : body_atoms(r)) {
            std::size_t from = g.index(node_name(a, mode));
            if (!seen.insert(from).second) continue;
            g.edges.push_back(DepEdge{from, to, ri, r.id, form != RuleForm::Horn, label, shift});
        }
    }
    return g;
}

}  // namespace dmtl
