#pragma once

// Finite representation of (possibly infinite) models of forward-propagating
// programs: an aperiodic prefix plus repetition patterns.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "dmtl/classification.hpp"
#include "dmtl/grounding.hpp"
#include "dmtl/materializer.hpp"
#include "dmtl/normal_form.hpp"

namespace dmtl {

inline constexpr std::size_t kDefaultWindowCap = 10000;

/// atom@(offset + x*period) for every integer x >= start_index.
struct Pattern {
    GroundAtom atom;
    Interval offset;
    Integer start_index = 0;
    Rational period = 1;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

inline bool operator<(const Pattern& a, const Pattern& b) {
    if (a.atom != b.atom) return a.atom < b.atom;
    if (a.offset.lo() != b.offset.lo()) return a.offset.lo() < b.offset.lo();
    if (a.offset.lo_open() != b.offset.lo_open()) return !a.offset.lo_open();
    if (a.offset.hi() != b.offset.hi()) return a.offset.hi() < b.offset.hi();
    if (a.offset.hi_open() != b.offset.hi_open()) return a.offset.hi_open();
    if (a.start_index != b.start_index) return a.start_index < b.start_index;
    return a.period < b.period;
}

inline std::string to_string(const Pattern& p) {
    return to_string(p.atom) + "@" + to_string(p.offset) + " + " + format_rational(p.period) + "x, x >= " +
           p.start_index.str();
}

enum class RepresentationType { Finite, Constant, Periodic };

inline const char* to_string(RepresentationType t) {
    switch (t) {
        case RepresentationType::Finite: return "finite";
        case RepresentationType::Constant: return "constant";
        case RepresentationType::Periodic: return "periodic";
    }
    return "?";
}

struct PeriodicModel {
    Model facts;
    std::vector<Pattern> patterns;  // sorted
    Rational period = 1;
    Rational horizon = 0;  // patterned / constant behaviour from here on

    RepresentationType type() const {
        if (!patterns.empty()) return RepresentationType::Periodic;
        for (const auto& [atom, set] : facts)
            if (!set.empty() && set.back().hi().is_pos_inf()) return RepresentationType::Constant;
        return RepresentationType::Finite;
    }
};

struct ReasonOptions {
    std::size_t cycle_cap = kDefaultCycleCap;
    std::size_t window_cap = kDefaultWindowCap;
};

/// Rules grouped by the SCC of their head in the ground dependency graph.
struct RuleGroup {
    std::vector<std::size_t> rules;  // indices into the program
    std::vector<GroundAtom> atoms;   // the SCC
};

/// One group per SCC that heads at least one rule, dependencies first.
/// Ties are broken by the smallest atom of each SCC.
inline std::vector<RuleGroup> group_and_sort(const Program& p) {
    auto g = dependency_graph(p, NodeMode::GroundAtom);
    std::map<std::string, GroundAtom> atom_of;
    for (const auto& r : p.rules) {
        for (const auto& a : body_atoms(r)) atom_of.emplace(to_string(a), to_ground(a));
        atom_of.emplace(to_string(r.head.as_atom()), to_ground(r.head.as_atom()));
    }
    auto scc = strongly_connected_components(g);
    std::vector<std::set<std::size_t>> succ(scc.count);
    std::vector<std::size_t> indegree(scc.count, 0);
    for (const auto& e : g.edges) {
        auto a = scc.component[e.from], b = scc.component[e.to];
        if (a != b && succ[a].insert(b).second) ++indegree[b];
    }
    std::vector<std::size_t> smallest(scc.count, g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v) smallest[scc.component[v]] = std::min(smallest[scc.component[v]], v);
    using Item = std::pair<std::size_t, std::size_t>;  // (smallest node, component)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (std::size_t c = 0; c < scc.count; ++c)
        if (indegree[c] == 0) ready.push({smallest[c], c});
    std::vector<RuleGroup> by_comp(scc.count);
    for (std::size_t v = 0; v < g.nodes.size(); ++v) by_comp[scc.component[v]].atoms.push_back(atom_of.at(g.nodes[v]));
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri)
        by_comp[scc.component[g.index(to_string(p.rules[ri].head.as_atom()))]].rules.push_back(ri);
    std::vector<RuleGroup> out;
    while (!ready.empty()) {
        auto [key, c] = ready.top();
        ready.pop();
        if (!by_comp[c].rules.empty()) out.push_back(std::move(by_comp[c]));
        for (auto d : succ[c])
            if (--indegree[d] == 0) ready.push({smallest[d], d});
    }
    return out;
}

/// Facts inside the window [(n-1)p, np), shifted left by (n-1)p.
inline Model normalize(const Model& m, const Rational& p, const Integer& n) {
    Rational base = Rational(n - 1) * p;
    return m.clipped(Interval::right_open(TimePoint(base), TimePoint(Rational(base + p)))).shifted(Rational(-base));
}

/// Every pattern occurrence intersecting `window` (window must end finitely).
inline Model extend(const std::vector<Pattern>& patterns, const Interval& window) {
    if (window.hi().is_pos_inf()) throw InputError("extend needs a window with a finite right end");
    Model out;
    for (const auto& pat : patterns) {
        Integer x = pat.start_index;
        if (window.lo().is_finite()) {
            Integer first = floor_of(Rational((window.lo().value() - pat.offset.hi().value()) / pat.period));
            x = std::max(x, first);
        }
        for (;; ++x) {
            Rational d = Rational(x) * pat.period;
            if (TimePoint(Rational(pat.offset.lo().value() + d)) > window.hi()) break;
            if (auto c = intersect(shift(pat.offset, d), window)) out.add(pat.atom, *c);
        }
    }
    return out;
}

struct Simplified {
    Model rays;
    std::vector<Pattern> patterns;
};

/// Turns a normalized window into patterns starting at index n-1; atoms that
/// fill the whole window become rays [(n-1)p, inf).
inline Simplified simplify(const Model& norm, const Rational& p, const Integer& n) {
    Simplified out;
    Interval full = Interval::right_open(0, TimePoint(p));
    Integer start = n - 1;
    for (const auto& [atom, set] : norm) {
        if (set.covers(full)) {
            out.rays.add(atom, Interval(TimePoint(Rational(Rational(start) * p)), false, TimePoint::infinity(), true));
            continue;
        }
        for (const auto& i : set) out.patterns.push_back(Pattern{atom, i, start, p});
    }
    std::sort(out.patterns.begin(), out.patterns.end());
    return out;
}

/// facts ∪ pattern occurrences, restricted to `window`.
inline Model unroll(const PeriodicModel& pm, const Interval& window) {
    Model out = pm.facts.clipped(window);
    out.add(extend(pm.patterns, window));
    return out;
}

namespace detail {

inline Rational look_back(const GroundRule& r, const Rational& p) {
    if (r.form == RuleForm::Horn) return 0;
    if (r.rho.hi().is_finite()) return r.rho.hi().value();
    return r.rho.lo().value() + p;
}

struct GroupOutcome {
    Model facts;
    std::vector<Pattern> patterns;
    Integer start = 0;
};

}  // namespace detail

/// Finite representation of the least model of (p, d) for a forward-
/// propagating program. Non-ground programs are grounded first.
///
/// Per rule group, windows [(n-1)p, np) of the materialized model are
/// compared after shifting to [0,p). Once enough consecutive windows agree
/// to cover the rules' look-back and all inputs of the group are already
/// periodic, the window repeats forever.
inline PeriodicModel reason(const Program& program, const Database& db, const ReasonOptions& opts = {}) {
    Program normal = to_normal_form(program);
    if (!is_forward_propagating(normal))
        throw FragmentError("reasoning supports only Horn, boxminus and diamondminus rules");
    Program g = ground(normal, db);

    // empty-body rules are facts over the whole timeline
    Database d = db;
    Program rest;
    for (auto& r : g.rules) {
        if (r.body.empty()) d.add(to_ground(r.head.as_atom()), Interval::everything());
        else rest.rules.push_back(std::move(r));
    }

    PeriodicModel pm;
    pm.period = pattern_length(rest, opts.cycle_cap);
    const Rational& p = pm.period;
    pm.facts = d;
    if (d.empty()) return pm;

    Rational max_db = max_time_point(d).value_or(Rational(0));
    Integer n = ceil_of(Rational(max_db / p));

    auto rules = compile_program(rest);
    auto groups = group_and_sort(rest);
    std::map<GroundAtom, std::size_t> owner;  // atom -> group index
    std::vector<detail::GroupOutcome> done;

    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const auto& grp = groups[gi];
        std::vector<GroundRule> grules;
        Rational lookback = 0;
        for (auto ri : grp.rules) {
            grules.push_back(rules[ri]);
            lookback = std::max(lookback, detail::look_back(rules[ri], p));
        }
        std::set<GroundAtom> mine(grp.atoms.begin(), grp.atoms.end());
        std::set<GroundAtom> inputs;
        for (const auto& r : grules)
            for (const auto& a : r.body)
                if (!mine.count(a)) inputs.insert(a);

        Integer k = std::max(Integer(1), ceil_of(Rational(lookback / p)));
        // window index from which all inputs are periodic and no database
        // fact of this group remains
        Integer settle = 0;
        std::optional<Rational> last_db;
        Materializer mat(grules);
        auto note_db = [&](const GroundAtom& a) {
            for (const auto& i : d.at(a)) {
                mat.add(a, i);
                for (const auto* t : {&i.lo(), &i.hi()})
                    if (t->is_finite() && (!last_db || t->value() > *last_db)) last_db = t->value();
            }
        };
        for (const auto& a : grp.atoms) note_db(a);
        std::vector<Pattern> input_patterns;
        for (const auto& a : inputs) {
            auto it = owner.find(a);
            if (it == owner.end()) {
                note_db(a);
                continue;
            }
            const auto& src = done[it->second];
            settle = std::max(settle, src.start);
            for (const auto& i : src.facts.at(a)) mat.add(a, i);
            for (const auto& pat : src.patterns)
                if (pat.atom == a) input_patterns.push_back(pat);
        }
        if (last_db) settle = std::max(settle, floor_of(Rational(*last_db / p)) + 1);

        std::optional<Model> prev;
        std::optional<Integer> run_start;
        TimePoint fed_to = TimePoint::neg_infinity();
        std::size_t iterations = 0;
        for (;; ++n) {
            if (++iterations > opts.window_cap)
                throw CapExceeded("no repeating window found within " + std::to_string(opts.window_cap) + " windows");
            TimePoint bound(Rational(Rational(n + 1) * p));
            if (!input_patterns.empty()) {
                auto w = Interval::make(fed_to, false, bound, true);
                if (w) mat.add(extend(input_patterns, *w));
                fed_to = bound;
            }
            mat.raise_bound(bound);
            mat.run();
            Model cur = normalize(mat.model(), p, n);
            Integer c = n - 1;
            if (prev && *prev == cur) {
                if (!run_start) run_start = c - 1;
            } else {
                run_start.reset();
            }
            prev = std::move(cur);
            if (run_start && c - *run_start >= k && c >= settle) break;
        }

        detail::GroupOutcome out;
        out.start = *run_start + 1;
        Rational cut = Rational(out.start) * p;
        Model own = mat.model().filtered([&](const GroundAtom& a) { return mine.count(a) > 0; });
        out.facts = own.clipped(Interval(TimePoint::neg_infinity(), true, TimePoint(cut), true));
        auto simple = simplify(normalize(own, p, out.start + 1), p, out.start + 1);
        out.facts.add(simple.rays);
        out.patterns = std::move(simple.patterns);
        for (const auto& a : grp.atoms) owner[a] = done.size();
        pm.horizon = std::max(pm.horizon, cut);
        pm.facts.add(out.facts);
        pm.patterns.insert(pm.patterns.end(), out.patterns.begin(), out.patterns.end());
        done.push_back(std::move(out));
    }
    std::sort(pm.patterns.begin(), pm.patterns.end());
    return pm;
}

}  // namespace dmtl
