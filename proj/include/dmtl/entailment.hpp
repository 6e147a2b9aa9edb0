#pragma once

#include "dmtl/periodic.hpp"

namespace dmtl {

/// True iff `q.atom` holds at every point of `q.interval` in the model
/// represented by `pm`.
inline bool entails(const PeriodicModel& pm, const Fact& q) {
    const Rational& p = pm.period;
    const Interval& qi = q.interval;
    std::vector<Pattern> own;
    for (const auto& pat : pm.patterns)
        if (pat.atom == q.atom) own.push_back(pat);

    Interval probe = qi;
    if (qi.hi().is_pos_inf()) {
        // beyond T the atom is constant or repeats with period p, so one
        // full period past T decides the whole ray
        Rational t = pm.horizon;
        if (qi.lo().is_finite()) t = std::max(t, qi.lo().value());
        for (const auto& i : pm.facts.at(q.atom))
            for (const auto* e : {&i.lo(), &i.hi()})
                if (e->is_finite()) t = std::max(t, e->value());
        probe = Interval(qi.lo(), qi.lo_open(), TimePoint(Rational(t + 2 * p)), false);
    }
    TimePoint lo = probe.lo().is_finite() ? TimePoint(Rational(probe.lo().value() - p)) : TimePoint::neg_infinity();
    Interval window(lo, true, TimePoint(Rational(probe.hi().value() + p)), false);
    IntervalSet have = pm.facts.at(q.atom).intersect(window);
    have.insert(extend(own, window).at(q.atom));
    return have.covers(probe);
}

}  // namespace dmtl
