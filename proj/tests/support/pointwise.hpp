#pragma once

// Brute-force point-set semantics used as an independent reference for the
// interval algebra. Nothing here calls the library's interval operations.

#include <algorithm>
#include <set>
#include <vector>

#include "dmtl/interval.hpp"

namespace support {

using dmtl::Interval;
using dmtl::Rational;
using dmtl::TimePoint;

inline bool member(const Interval& i, const Rational& t) {
    TimePoint x(t);
    if (i.lo().is_finite()) {
        if (i.lo_open() ? !(i.lo().value() < t) : !(i.lo().value() <= t)) return false;
    } else if (i.lo().is_pos_inf()) {
        return false;
    }
    if (i.hi().is_finite()) {
        if (i.hi_open() ? !(t < i.hi().value()) : !(t <= i.hi().value())) return false;
    } else if (i.hi().is_neg_inf()) {
        return false;
    }
    return true;
}

/// The finite endpoints of all intervals, midpoints between consecutive
/// ones, and points beyond the extremes: whenever a Boolean combination of
/// the intervals is non-empty it contains one of these points.
inline std::vector<Rational> witnesses(const std::vector<Interval>& parts) {
    std::set<Rational> ends;
    for (const auto& i : parts) {
        if (i.lo().is_finite()) ends.insert(i.lo().value());
        if (i.hi().is_finite()) ends.insert(i.hi().value());
    }
    if (ends.empty()) ends.insert(Rational(0));
    std::vector<Rational> sorted(ends.begin(), ends.end());
    std::vector<Rational> out = sorted;
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k) out.push_back((sorted[k] + sorted[k + 1]) / 2);
    out.push_back(sorted.front() - 1);
    out.push_back(sorted.back() + 1);
    return out;
}

/// {s : t - s in rho} as an interval (mirror of rho moved to t).
inline Interval preimage(const Rational& t, const Interval& rho) {
    TimePoint lo = rho.hi().is_pos_inf() ? TimePoint::neg_infinity() : TimePoint(Rational(t - rho.hi().value()));
    TimePoint hi = TimePoint(Rational(t - rho.lo().value()));
    return Interval(lo, rho.hi_open(), hi, rho.lo_open());
}

/// diamondminus[rho] A at t, A true exactly on `a`.
inline bool diamond_holds(const Interval& a, const Interval& rho, const Rational& t) {
    Interval back = preimage(t, rho);
    for (const auto& s : witnesses({a, back}))
        if (member(a, s) && member(back, s)) return true;
    return false;
}

/// boxminus[rho] A at t, A true exactly on `a`.
inline bool box_holds(const Interval& a, const Interval& rho, const Rational& t) {
    Interval back = preimage(t, rho);
    for (const auto& s : witnesses({a, back}))
        if (member(back, s) && !member(a, s)) return false;
    return true;
}

/// Points around every interesting value: the values themselves and small
/// offsets on both sides.
inline std::vector<Rational> probe_grid(const std::vector<Rational>& values) {
    std::set<Rational> out;
    for (const auto& v : values)
        for (const Rational& d : {Rational(0), Rational(1, 3), Rational(-1, 3), Rational(1, 7), Rational(-1, 7),
                                  Rational(1, 1000), Rational(-1, 1000)})
            out.insert(v + d);
    return {out.begin(), out.end()};
}

/// Endpoints of i and rho and their sums, as probing anchors.
inline std::vector<Rational> anchors(const Interval& i, const Interval& rho) {
    std::vector<Rational> v;
    std::vector<Rational> a, b;
    for (const auto* e : {&i.lo(), &i.hi()})
        if (e->is_finite()) a.push_back(e->value());
    for (const auto* e : {&rho.lo(), &rho.hi()})
        if (e->is_finite()) b.push_back(e->value());
    for (const auto& x : a) {
        v.push_back(x);
        for (const auto& y : b) v.push_back(x + y);
    }
    for (const auto& y : b) v.push_back(y);
    v.push_back(Rational(0));
    return v;
}

}  // namespace support
