#pragma once

// Reference fixpoint: every round applies every rule to the whole model of
// the previous round. Deliberately simple; used to cross-check `reason`.

#include <functional>
#include <string>

#include "dmtl/grounding.hpp"
#include "dmtl/materializer.hpp"
#include "dmtl/normal_form.hpp"

namespace dmtl {

inline constexpr std::size_t kDefaultOracleStepCap = 100000;

struct OracleOptions {
    std::size_t step_cap = kDefaultOracleStepCap;
    /// Called after every round with the 1-based round number and the model.
    std::function<void(std::size_t, const Model&)> observer;
};

struct OracleResult {
    Model model;
    std::size_t rounds = 0;  // rounds that changed the model
};

/// Least fixpoint of (p, d) with every fact clipped to (-inf, horizon];
/// `horizon` may be +inf. Throws CapExceeded after `step_cap` rounds.
inline OracleResult naive_fixpoint_run(const Program& p, const Database& d, const TimePoint& horizon,
                                       const OracleOptions& opts = {}) {
    Program g = ground(to_normal_form(p), d);
    auto rules = compile_program(g);
    auto window = Interval::make(TimePoint::neg_infinity(), true, horizon, !horizon.is_finite());
    OracleResult res;
    if (!window) return res;
    res.model = d.clipped(*window);
    for (;;) {
        Model next = res.model;
        bool grew = false;
        for (const auto& r : rules)
            for (const auto& f : apply_rule(r, res.model))
                if (auto c = intersect(f.interval, *window)) grew = next.add(f.atom, *c) || grew;
        if (!grew) return res;
        if (++res.rounds > opts.step_cap)
            throw CapExceeded("oracle exceeded the step cap of " + std::to_string(opts.step_cap) + " rounds");
        res.model = std::move(next);
        if (opts.observer) opts.observer(res.rounds, res.model);
    }
}

inline Model naive_fixpoint_bounded(const Program& p, const Database& d, const TimePoint& horizon,
                                    const OracleOptions& opts = {}) {
    return naive_fixpoint_run(p, d, horizon, opts).model;
}

}  // namespace dmtl
