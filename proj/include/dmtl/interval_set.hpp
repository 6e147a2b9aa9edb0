#pragma once

#include <initializer_list>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "dmtl/interval.hpp"

namespace dmtl {

namespace detail {

struct ByLowerEndpoint {
    bool operator()(const Interval& a, const Interval& b) const {
        if (a.lo() != b.lo()) return a.lo() < b.lo();
        return !a.lo_open() && b.lo_open();
    }
};

/// True when `a` and `b` overlap or touch in a way that their union is a
/// single interval.
inline bool mergeable(const Interval& a, const Interval& b) {
    const Interval& first = ByLowerEndpoint{}(a, b) ? a : b;
    const Interval& second = &first == &a ? b : a;
    if (first.hi() > second.lo()) return true;
    if (first.hi() < second.lo()) return false;
    return !first.hi_open() || !second.lo_open();
}

inline Interval hull(const Interval& a, const Interval& b) {
    bool a_lower = ByLowerEndpoint{}(a, b) || a == b;
    const Interval& low = a_lower ? a : b;
    bool a_upper = a.hi() > b.hi() || (a.hi() == b.hi() && !a.hi_open());
    const Interval& high = a_upper ? a : b;
    return Interval(low.lo(), low.lo_open(), high.hi(), high.hi_open());
}

}  // namespace detail

/// Canonical union of intervals: sorted, pairwise disjoint and never
/// adjacent, so equal point sets compare equal.
class IntervalSet {
    using Storage = std::set<Interval, detail::ByLowerEndpoint>;

  public:
    using const_iterator = Storage::const_iterator;

    IntervalSet() = default;
    IntervalSet(std::initializer_list<Interval> items) {
        for (const auto& i : items) insert(i);
    }

    /// Adds the points of `i`; returns true if the point set grew.
    bool insert(const Interval& i) {
        auto it = items_.upper_bound(i);
        if (it != items_.begin() && detail::mergeable(*std::prev(it), i)) --it;
        if (it == items_.end() || !detail::mergeable(*it, i)) {
            items_.insert(it, i);
            return true;
        }
        if (it->contains(i)) return false;
        Interval merged = i;
        while (it != items_.end() && detail::mergeable(*it, i)) {
            merged = detail::hull(merged, *it);
            it = items_.erase(it);
        }
        items_.insert(it, std::move(merged));
        return true;
    }

    bool insert(const IntervalSet& other) {
        bool grew = false;
        for (const auto& i : other) grew = insert(i) || grew;
        return grew;
    }

    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }
    const_iterator begin() const noexcept { return items_.begin(); }
    const_iterator end() const noexcept { return items_.end(); }
    const Interval& front() const { return *items_.begin(); }
    const Interval& back() const { return *items_.rbegin(); }

    /// Components that share at least one point with `i`.
    std::vector<Interval> overlapping(const Interval& i) const {
        std::vector<Interval> out;
        auto it = items_.upper_bound(i);
        if (it != items_.begin()) --it;
        for (; it != items_.end(); ++it) {
            if (it->lo() > i.hi()) break;
            if (dmtl::intersect(*it, i)) out.push_back(*it);
        }
        return out;
    }

    bool contains(const Rational& t) const {
        auto it = items_.upper_bound(Interval::point(t));
        if (it == items_.begin()) return false;
        return std::prev(it)->contains(t);
    }

    /// Subset test for a whole interval.
    bool covers(const Interval& i) const {
        auto it = items_.upper_bound(i);
        if (it == items_.begin()) return false;
        return std::prev(it)->contains(i);
    }

    IntervalSet intersect(const Interval& window) const {
        IntervalSet out;
        for (const auto& c : overlapping(window))
            if (auto cut = dmtl::intersect(c, window)) out.items_.insert(out.items_.end(), *cut);
        return out;
    }

    IntervalSet intersect(const IntervalSet& other) const {
        IntervalSet out;
        for (const auto& i : other)
            for (const auto& c : overlapping(i))
                if (auto cut = dmtl::intersect(c, i)) out.items_.insert(*cut);
        return out;
    }

    IntervalSet shifted(const Rational& d) const {
        IntervalSet out;
        for (const auto& i : items_) out.items_.insert(out.items_.end(), shift(i, d));
        return out;
    }

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
        return a.items_.size() == b.items_.size() && std::equal(a.begin(), a.end(), b.begin());
    }

  private:
    Storage items_;
};

/// Value-returning form of `IntervalSet::insert`.
inline IntervalSet insert_coalesce(IntervalSet s, const Interval& i) {
    s.insert(i);
    return s;
}

inline std::string to_string(const IntervalSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& i : s) {
        if (!first) out += ", ";
        out += to_string(i);
        first = false;
    }
    return out + "}";
}

}  // namespace dmtl
