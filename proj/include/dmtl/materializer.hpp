#pragma once

// Immediate consequences of forward-propagating rules and a semi-naive
// materializer restricted to a growing window (-inf, bound).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmtl/ast.hpp"
#include "dmtl/model.hpp"
#include "dmtl/printer.hpp"

namespace dmtl {

/// A ground rule of shape Horn, boxminus or diamondminus.
struct GroundRule {
    RuleForm form = RuleForm::Horn;
    std::vector<GroundAtom> body;
    GroundAtom head;
    Interval rho = Interval::point(0);  // unused for Horn
    std::string id;
};

inline GroundRule compile_rule(const Rule& r) {
    auto form = form_of(r);
    if (!form) throw FragmentError("rule '" + to_string(r) + "' is not in normal form");
    if (!is_forward_propagating_form(*form))
        throw FragmentError("rule '" + to_string(r) + "' is outside the forward-propagating fragment");
    if (!is_ground(r)) throw FragmentError("rule '" + to_string(r) + "' is not ground");
    GroundRule g;
    g.form = *form;
    g.head = to_ground(r.head.as_atom());
    g.id = r.id;
    for (const auto& a : body_atoms(r)) g.body.push_back(to_ground(a));
    if (*form != RuleForm::Horn) g.rho = r.body.front().range();
    return g;
}

inline std::vector<GroundRule> compile_program(const Program& p) {
    std::vector<GroundRule> out;
    for (const auto& r : p.rules) out.push_back(compile_rule(r));
    return out;
}

/// Every time point at which the head is derived from `m` in one step.
inline IntervalSet consequences(const GroundRule& r, const Model& m) {
    IntervalSet out;
    switch (r.form) {
        case RuleForm::DiamondMinus:
            for (const auto& i : m.at(r.body.front())) out.insert(diamond_minus_apply(i, r.rho));
            break;
        case RuleForm::BoxMinus:
            for (const auto& i : m.at(r.body.front()))
                if (auto b = box_minus_apply(i, r.rho)) out.insert(*b);
            break;
        case RuleForm::Horn: {
            if (r.body.empty()) return IntervalSet{Interval::everything()};
            out = m.at(r.body.front());
            for (std::size_t k = 1; k < r.body.size() && !out.empty(); ++k) out = out.intersect(m.at(r.body[k]));
            break;
        }
        default: throw FragmentError("unsupported rule form in " + r.id);
    }
    return out;
}

/// Head facts derived from `m` in one step that `m` does not already contain.
inline std::vector<Fact> apply_rule(const GroundRule& r, const Model& m) {
    std::vector<Fact> out;
    const IntervalSet& known = m.at(r.head);
    for (const auto& i : consequences(r, m))
        if (!known.covers(i)) out.push_back(Fact{r.head, i});
    return out;
}

inline std::vector<Fact> apply_rule(const Rule& r, const Model& m) { return apply_rule(compile_rule(r), m); }

/// Semi-naive evaluation of a fixed rule set. Only the part of the model
/// strictly before `bound` is materialized; consequences beyond it are kept
/// aside and released when the bound is raised. Because every rule looks
/// only into the past, the materialized part is exactly the least model
/// restricted to (-inf, bound).
class Materializer {
  public:
    explicit Materializer(std::vector<GroundRule> rules) : rules_(std::move(rules)) {
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            if (rules_[i].form == RuleForm::Horn && rules_[i].body.empty()) {
                seeds_.push_back(i);
                continue;
            }
            for (const auto& a : rules_[i].body) {
                auto& v = readers_[a];
                if (v.empty() || v.back() != i) v.push_back(i);
            }
        }
    }

    /// Adds facts; parts at or beyond the bound wait for `raise_bound`.
    void add(const GroundAtom& atom, const Interval& i) { route(atom, i); }
    void add(const Model& m) {
        for (const auto& [atom, set] : m)
            for (const auto& i : set) route(atom, i);
    }

    /// Moves the bound to `b` (monotone); call `run` afterwards.
    void raise_bound(const TimePoint& b) {
        if (b <= bound_) return;
        bound_ = b;
        Model still;
        for (const auto& [atom, set] : pending_)
            for (const auto& i : set) route_into(atom, i, still);
        pending_ = std::move(still);
    }

    /// Runs to fixpoint inside the window; returns the number of rounds.
    std::size_t run(std::size_t round_cap = 1000000) {
        if (!seeded_) {
            seeded_ = true;
            for (auto i : seeds_) route(rules_[i].head, Interval::everything());
        }
        std::size_t rounds = 0;
        while (!delta_.empty()) {
            if (++rounds > round_cap) throw CapExceeded("materialization exceeded " + std::to_string(round_cap) + " rounds");
            Model delta = std::move(delta_);
            delta_ = Model{};
            std::vector<std::size_t> touched;
            for (const auto& [atom, set] : delta)
                if (auto it = readers_.find(atom); it != readers_.end())
                    touched.insert(touched.end(), it->second.begin(), it->second.end());
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (auto ri : touched) fire(rules_[ri], delta);
        }
        return rounds;
    }

    const Model& model() const noexcept { return full_; }
    const Model& pending() const noexcept { return pending_; }
    const TimePoint& bound() const noexcept { return bound_; }

  private:
    void fire(const GroundRule& r, const Model& delta) {
        switch (r.form) {
            case RuleForm::DiamondMinus:
                for (const auto& i : delta.at(r.body.front())) route(r.head, diamond_minus_apply(i, r.rho));
                break;
            case RuleForm::BoxMinus: {
                // not distributive over unions: recompute on whole components
                std::vector<Interval> comps;
                for (const auto& i : delta.at(r.body.front())) {
                    auto over = full_.at(r.body.front()).overlapping(i);
                    comps.insert(comps.end(), over.begin(), over.end());
                }
                for (const auto& c : comps)
                    if (auto b = box_minus_apply(c, r.rho)) route(r.head, *b);
                break;
            }
            case RuleForm::Horn:
                for (std::size_t k = 0; k < r.body.size(); ++k) {
                    if (!delta.contains(r.body[k])) continue;
                    for (const auto& d : delta.at(r.body[k])) {
                        IntervalSet acc{d};
                        for (std::size_t j = 0; j < r.body.size() && !acc.empty(); ++j)
                            if (j != k) acc = acc.intersect(full_.at(r.body[j]));
                        for (const auto& i : acc) route(r.head, i);
                    }
                }
                break;
            default: throw FragmentError("unsupported rule form in " + r.id);
        }
    }

    void route(const GroundAtom& atom, const Interval& i) { route_into(atom, i, pending_); }

    void route_into(const GroundAtom& atom, const Interval& i, Model& later) {
        auto window = Interval::make(TimePoint::neg_infinity(), true, bound_, true);
        if (window) {
            if (auto inside = intersect(i, *window)) {
                if (!full_.at(atom).covers(*inside)) {
                    full_.add(atom, *inside);
                    delta_.add(atom, *inside);
                }
            }
        }
        if (auto beyond = Interval::make(bound_, false, i.hi(), i.hi_open()))
            if (auto rest = intersect(i, *beyond)) later.add(atom, *rest);
    }

    std::vector<GroundRule> rules_;
    std::map<GroundAtom, std::vector<std::size_t>> readers_;
    std::vector<std::size_t> seeds_;
    bool seeded_ = false;
    TimePoint bound_ = TimePoint::neg_infinity();
    Model full_;
    Model delta_;
    Model pending_;
};

}  // namespace dmtl
