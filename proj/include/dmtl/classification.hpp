#pragma once

// Termination analysis: finite-node marking, rule classes, fragment flags,
// repetition-pattern length.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dmtl/cycles.hpp"
#include "dmtl/dependency_graph.hpp"

namespace dmtl {

enum class RuleClass { Harmless, Harmful, Dangerous };

inline const char* to_string(RuleClass c) {
    switch (c) {
        case RuleClass::Harmless: return "harmless";
        case RuleClass::Harmful: return "harmful";
        case RuleClass::Dangerous: return "dangerous";
    }
    return "?";
}

/// Which marking case first made a node finite.
enum class FiniteCase { None, NoIncoming, FiniteIncoming, TemporalAcyclic, CycleIntersection };

inline const char* to_string(FiniteCase c) {
    switch (c) {
        case FiniteCase::None: return "none";
        case FiniteCase::NoIncoming: return "i";
        case FiniteCase::FiniteIncoming: return "ii";
        case FiniteCase::TemporalAcyclic: return "iii";
        case FiniteCase::CycleIntersection: return "iv";
    }
    return "?";
}

struct FragmentFlags {
    bool bounded = false;
    bool union_free = false;
    bool temporal_linear = false;
    bool forward_propagating = false;
};

struct CycleInfo {
    std::vector<std::string> nodes;
    Interval interval_weight = Interval::point(0);
    TimePoint shift_sum = 0;
};

struct FragmentReport {
    FragmentFlags flags;
    bool harmless_program = false;
    std::vector<std::string> nodes;
    std::vector<bool> finite;             // per node
    std::vector<FiniteCase> finite_case;  // per node
    std::vector<RuleClass> rule_classes;  // per rule
    std::vector<CycleInfo> cycles;
    std::vector<std::string> warnings;
    Rational pattern_length = 1;

    bool is_finite(const std::string& node) const {
        auto it = std::find(nodes.begin(), nodes.end(), node);
        return it != nodes.end() && finite[static_cast<std::size_t>(it - nodes.begin())];
    }
};

struct ClassifyOptions {
    std::size_t cycle_cap = kDefaultCycleCap;
    /// Visiting order for in-place marking sweeps; empty means simultaneous
    /// sweeps. The set of finite nodes does not depend on it.
    std::vector<std::size_t> node_order;
    /// Predicates that may carry database facts even though rules derive
    /// them. Such facts enter a cycle from outside, so case (iv) cannot hold
    /// for cycles through these predicates.
    std::set<std::string> database_predicates;
};

/// Bounded: no `top`, no empty-body rule, only bounded intervals.
inline bool is_bounded(const Program& p) {
    for (const auto& r : p.rules) {
        if (r.body.empty() || mentions_top(r.head)) return false;
        std::vector<Interval> ranges;
        for (const auto& l : r.body) {
            if (mentions_top(l)) return false;
            collect_ranges(l, ranges);
        }
        collect_ranges(r.head, ranges);
        for (const auto& i : ranges)
            if (!i.is_bounded()) return false;
    }
    return true;
}

/// No two rules share a head: compared by predicate unless the program is
/// ground, in which case by atom.
inline bool is_union_free(const Program& p) {
    bool by_atom = is_ground(p);
    std::set<std::string> heads;
    for (const auto& r : p.rules) {
        auto atoms = head_atoms(r);
        for (const auto& a : atoms)
            if (!heads.insert(by_atom ? to_string(a) : a.predicate).second) return false;
    }
    return true;
}

inline bool is_forward_propagating(const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(), [](const Rule& r) {
        auto f = form_of(r);
        return f && is_forward_propagating_form(*f);
    });
}

/// At most one body predicate per rule lies in the head's SCC, counted only
/// for SCCs that contain a special edge.
inline bool is_temporal_linear(const Program& p, const DepGraph& g, NodeMode mode = NodeMode::Predicate) {
    auto scc = strongly_connected_components(g);
    std::vector<bool> temporal(scc.count, false);
    for (const auto& e : g.edges)
        if (e.special && scc.component[e.from] == scc.component[e.to]) temporal[scc.component[e.to]] = true;
    for (const auto& r : p.rules) {
        std::size_t head = g.index(node_name(r.head.as_atom(), mode));
        std::size_t c = scc.component[head];
        if (!temporal[c]) continue;
        std::set<std::size_t> inside;
        for (const auto& a : body_atoms(r)) {
            std::size_t b = g.index(node_name(a, mode));
            if (scc.component[b] == c) inside.insert(b);
        }
        if (inside.size() > 1) return false;
    }
    return true;
}

inline FragmentFlags fragment_checks(const Program& p) {
    FragmentFlags f;
    f.bounded = is_bounded(p);
    f.union_free = is_union_free(p);
    f.forward_propagating = is_forward_propagating(p);
    f.temporal_linear = is_normal_form(p) && is_temporal_linear(p, dependency_graph(p));
    return f;
}

namespace detail {
inline bool positive_shift(const Cycle& c) { return c.shift_sum.is_finite() && c.shift_sum.value() > 0; }
}  // namespace detail

/// lcm of the positive finite shift sums of `cycles`, or 1 if there are none.
inline Rational cycle_pattern_length(const std::vector<Cycle>& cycles) {
    std::vector<Rational> positive;
    for (const auto& c : cycles)
        if (detail::positive_shift(c)) positive.push_back(c.shift_sum.value());
    return positive.empty() ? Rational(1) : lcm_rationals(positive);
}

/// Repetition-pattern length: lcm over SCCs of the per-SCC lengths (SCCs
/// without a positive cycle impose nothing). Ground
/// programs are analysed over ground atoms, others over predicates.
inline Rational pattern_length(const Program& p, std::size_t cycle_cap = kDefaultCycleCap) {
    auto g = dependency_graph(p, is_ground(p) ? NodeMode::GroundAtom : NodeMode::Predicate);
    auto cycles = simple_cycles(g, cycle_cap);
    std::map<std::size_t, std::vector<Cycle>> by_scc;
    for (auto& c : cycles) by_scc[c.scc].push_back(std::move(c));
    std::vector<Rational> lengths;
    for (const auto& [scc, cs] : by_scc)
        if (std::any_of(cs.begin(), cs.end(), [](const Cycle& c) { return detail::positive_shift(c); }))
            lengths.push_back(cycle_pattern_length(cs));
    if (lengths.empty()) lengths.push_back(1);
    return lcm_rationals(lengths);
}

/// `floor(t1 / (t2 - t1) + 1)`: applications of diamondminus[t1,t2] P -> P
/// needed until consecutive derived intervals overlap.
inline Integer max_applications(const Rational& t1, const Rational& t2) {
    if (t1 < 0) throw InputError("max_applications: t1 must be non-negative");
    if (t1 >= t2) throw InputError("max_applications: requires t1 < t2");
    return floor_of(Rational(t1 / (t2 - t1) + 1));
}

namespace detail {

class Marker {
  public:
    Marker(const Program& p, const DepGraph& g, const std::vector<Cycle>& cycles, const ClassifyOptions& opts)
        : p_(p), g_(g), cycles_(cycles), opts_(opts), n_(g.nodes.size()) {
        incoming_.assign(n_, {});
        for (std::size_t e = 0; e < g_.edges.size(); ++e) incoming_[g_.edges[e].to].push_back(e);
        heads_.assign(p_.rules.size(), 0);
        bodies_.assign(p_.rules.size(), {});
        rules_into_.assign(n_, {});
        for (std::size_t ri = 0; ri < p_.rules.size(); ++ri) {
            heads_[ri] = g_.index(name_of(p_.rules[ri].head.as_atom()));
            for (const auto& a : body_atoms(p_.rules[ri])) bodies_[ri].insert(g_.index(name_of(a)));
            rules_into_[heads_[ri]].push_back(ri);
        }
        through_.assign(n_, {});
        for (std::size_t c = 0; c < cycles_.size(); ++c) {
            std::set<std::size_t> on(cycles_[c].nodes.begin(), cycles_[c].nodes.end());
            for (auto v : on) through_[v].push_back(c);
        }
        intersection_ok_.assign(n_, false);
        for (std::size_t v = 0; v < n_; ++v) intersection_ok_[v] = cycle_intersection(v);
    }

    void force_non_finite(std::vector<bool> mask) { forced_ = std::move(mask); }

    /// Without a node order every sweep decides all nodes against the marking
    /// at the start of the sweep, so each node is reported with the case that
    /// applies when it first becomes finite. With an order, nodes are marked
    /// immediately as they are visited.
    void run() {
        finite_.assign(n_, false);
        cases_.assign(n_, FiniteCase::None);
        bool simultaneous = opts_.node_order.empty();
        std::vector<std::size_t> order = opts_.node_order;
        if (simultaneous) {
            order.resize(n_);
            std::iota(order.begin(), order.end(), 0);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::pair<std::size_t, FiniteCase>> marks;
            for (auto v : order) {
                if (finite_[v] || (!forced_.empty() && forced_[v])) continue;
                FiniteCase c = qualifies(v);
                if (c == FiniteCase::None) continue;
                if (simultaneous) {
                    marks.push_back({v, c});
                } else {
                    finite_[v] = true;
                    cases_[v] = c;
                }
                changed = true;
            }
            for (auto [v, c] : marks) {
                finite_[v] = true;
                cases_[v] = c;
            }
        }
    }

    const std::vector<bool>& finite() const { return finite_; }
    const std::vector<FiniteCase>& cases() const { return cases_; }
    std::size_t head_of(std::size_t rule) const { return heads_[rule]; }
    const std::set<std::size_t>& body_of(std::size_t rule) const { return bodies_[rule]; }

  private:
    static std::string name_of(const Atom& a) { return node_name(a, NodeMode::Predicate); }

    bool edge_finite(std::size_t e) const {
        const auto& body = bodies_[g_.edges[e].rule];
        return std::any_of(body.begin(), body.end(), [&](std::size_t b) { return finite_[b]; });
    }

    FiniteCase qualifies(std::size_t v) const {
        if (incoming_[v].empty()) return FiniteCase::NoIncoming;
        if (std::all_of(incoming_[v].begin(), incoming_[v].end(), [&](std::size_t e) { return edge_finite(e); }))
            return FiniteCase::FiniteIncoming;
        if (temporal_acyclic(v)) return FiniteCase::TemporalAcyclic;
        if (intersection_ok_[v]) return FiniteCase::CycleIntersection;
        return FiniteCase::None;
    }

    /// After deleting finite nodes and edges, v's SCC has only [0,0] cycles and
    /// receives nothing from outside.
    bool temporal_acyclic(std::size_t v) const {
        std::vector<bool> node_on(n_), edge_on(g_.edges.size());
        for (std::size_t u = 0; u < n_; ++u) node_on[u] = !finite_[u];
        for (std::size_t e = 0; e < g_.edges.size(); ++e)
            edge_on[e] = !edge_finite(e) && node_on[g_.edges[e].from] && node_on[g_.edges[e].to];
        auto scc = strongly_connected_components(g_, &edge_on, &node_on);
        std::size_t c = scc.component[v];
        std::vector<bool> inside_edge(g_.edges.size(), false);
        for (std::size_t e = 0; e < g_.edges.size(); ++e) {
            if (!edge_on[e]) continue;
            bool to_in = scc.component[g_.edges[e].to] == c;
            bool from_in = scc.component[g_.edges[e].from] == c;
            if (to_in && !from_in) return false;
            inside_edge[e] = to_in && from_in;
        }
        const Interval zero = Interval::point(0);
        auto cycles = simple_cycles(g_, opts_.cycle_cap, &inside_edge);
        return std::all_of(cycles.begin(), cycles.end(), [&](const Cycle& cy) { return cy.interval_weight == zero; });
    }

    /// v lies on some simple cycle, and along every cycle through v each rule
    /// feeding the cycle from outside also reads a predicate of the cycle.
    bool cycle_intersection(std::size_t v) const {
        if (through_[v].empty()) return false;
        for (auto ci : through_[v]) {
            std::set<std::size_t> on(cycles_[ci].nodes.begin(), cycles_[ci].nodes.end());
            for (auto u : on) {
                if (opts_.database_predicates.count(g_.nodes[u])) return false;
                for (auto ri : rules_into_[u]) {
                    const auto& body = bodies_[ri];
                    bool outside = body.empty() || std::any_of(body.begin(), body.end(), [&](std::size_t b) { return !on.count(b); });
                    if (!outside) continue;
                    bool touches = std::any_of(body.begin(), body.end(), [&](std::size_t b) { return on.count(b) > 0; });
                    if (!touches) return false;
                }
            }
        }
        return true;
    }

    const Program& p_;
    const DepGraph& g_;
    const std::vector<Cycle>& cycles_;
    const ClassifyOptions& opts_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> incoming_;
    std::vector<std::size_t> heads_;
    std::vector<std::set<std::size_t>> bodies_;
    std::vector<std::vector<std::size_t>> rules_into_;
    std::vector<std::vector<std::size_t>> through_;
    std::vector<bool> intersection_ok_;
    std::vector<bool> forced_;
    std::vector<bool> finite_;
    std::vector<FiniteCase> cases_;
};

}  // namespace detail

/// Finite-node marking and rule classification. Unbounded programs are
/// classified with every head of a temporal rule non-finite (plus a warning).
inline FragmentReport classify_rules(const Program& p, const ClassifyOptions& opts = {}) {
    if (!is_normal_form(p)) throw FragmentError("classification requires a program in temporal normal form");
    FragmentReport rep;
    rep.flags = fragment_checks(p);
    auto g = dependency_graph(p);
    auto cycles = simple_cycles(g, opts.cycle_cap);
    rep.nodes = g.nodes;
    for (const auto& c : cycles) {
        CycleInfo info{{}, c.interval_weight, c.shift_sum};
        for (auto v : c.nodes) info.nodes.push_back(g.nodes[v]);
        rep.cycles.push_back(std::move(info));
    }

    if (!opts.node_order.empty()) {
        auto sorted = opts.node_order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i || sorted.size() != g.nodes.size())
                throw InputError("node_order must be a permutation of the graph nodes");
    }

    detail::Marker marker(p, g, cycles, opts);
    if (!rep.flags.bounded) {
        std::vector<bool> forced(g.nodes.size(), false);
        for (const auto& e : g.edges)
            if (e.special) forced[e.to] = true;
        marker.force_non_finite(std::move(forced));
        rep.warnings.push_back("program is not bounded: heads of temporal rules are treated as non-finite");
    }
    marker.run();
    rep.finite = marker.finite();
    rep.finite_case = marker.cases();

    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
        const auto& body = marker.body_of(ri);
        bool harmless = std::any_of(body.begin(), body.end(), [&](std::size_t b) { return rep.finite[b]; });
        if (harmless) rep.rule_classes.push_back(RuleClass::Harmless);
        else if (*form_of(p.rules[ri]) == RuleForm::Horn) rep.rule_classes.push_back(RuleClass::Harmful);
        else rep.rule_classes.push_back(RuleClass::Dangerous);
    }
    rep.harmless_program = rep.flags.bounded && std::all_of(rep.rule_classes.begin(), rep.rule_classes.end(),
                                                            [](RuleClass c) { return c == RuleClass::Harmless; });
    std::map<std::size_t, std::vector<Cycle>> by_scc;
    for (const auto& c : cycles) by_scc[c.scc].push_back(c);
    std::vector<Rational> lengths;
    for (const auto& [scc, cs] : by_scc)
        if (std::any_of(cs.begin(), cs.end(), [](const Cycle& c) { return detail::positive_shift(c); }))
            lengths.push_back(cycle_pattern_length(cs));
    if (lengths.empty()) lengths.push_back(1);
    rep.pattern_length = lcm_rationals(lengths);
    return rep;
}

}  // namespace dmtl
