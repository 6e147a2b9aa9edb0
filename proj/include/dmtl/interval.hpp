#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "dmtl/error.hpp"
#include "dmtl/time_point.hpp"

namespace dmtl {

/// A non-empty interval of the rational timeline, `<lo,hi>` with independent
/// open/closed flags. Infinite endpoints are always open.
class Interval {
  public:
    /// Returns nullopt when the described point set is empty.
    static std::optional<Interval> make(TimePoint lo, bool lo_open, TimePoint hi, bool hi_open) {
        if (!lo.is_finite()) lo_open = true;
        if (!hi.is_finite()) hi_open = true;
        if (lo.is_pos_inf() || hi.is_neg_inf()) return std::nullopt;
        if (hi < lo) return std::nullopt;
        if (lo == hi && (lo_open || hi_open)) return std::nullopt;
        return Interval(std::move(lo), lo_open, std::move(hi), hi_open, Unchecked{});
    }

    /// Throws InputError when the interval would be empty.
    Interval(TimePoint lo, bool lo_open, TimePoint hi, bool hi_open) {
        auto checked = make(lo, lo_open, hi, hi_open);
        if (!checked)
            throw InputError("empty interval " + std::string(lo_open ? "(" : "[") + to_string(lo) + "," +
                             to_string(hi) + (hi_open ? ")" : "]"));
        *this = std::move(*checked);
    }

    static Interval closed(TimePoint lo, TimePoint hi) { return Interval(std::move(lo), false, std::move(hi), false); }
    static Interval point(TimePoint t) { return closed(t, t); }
    static Interval everything() { return Interval(TimePoint::neg_infinity(), true, TimePoint::infinity(), true); }
    /// `[lo, hi)`
    static Interval right_open(TimePoint lo, TimePoint hi) { return Interval(std::move(lo), false, std::move(hi), true); }

    const TimePoint& lo() const noexcept { return lo_; }
    const TimePoint& hi() const noexcept { return hi_; }
    bool lo_open() const noexcept { return lo_open_; }
    bool hi_open() const noexcept { return hi_open_; }

    bool is_bounded() const noexcept { return lo_.is_finite() && hi_.is_finite(); }
    bool is_punctual() const noexcept { return lo_ == hi_; }
    TimePoint length() const { return is_bounded() ? hi_ - lo_ : TimePoint::infinity(); }

    bool contains(const Rational& t) const {
        TimePoint p(t);
        bool above = lo_open_ ? lo_ < p : lo_ <= p;
        bool below = hi_open_ ? p < hi_ : p <= hi_;
        return above && below;
    }

    /// Subset test.
    bool contains(const Interval& other) const {
        bool lo_ok = lo_ < other.lo_ || (lo_ == other.lo_ && (!lo_open_ || other.lo_open_));
        bool hi_ok = other.hi_ < hi_ || (hi_ == other.hi_ && (!hi_open_ || other.hi_open_));
        return lo_ok && hi_ok;
    }

    friend bool operator==(const Interval&, const Interval&) = default;

  private:
    struct Unchecked {};
    Interval(TimePoint lo, bool lo_open, TimePoint hi, bool hi_open, Unchecked)
        : lo_(std::move(lo)), hi_(std::move(hi)), lo_open_(lo_open), hi_open_(hi_open) {}

    TimePoint lo_;
    TimePoint hi_;
    bool lo_open_ = false;
    bool hi_open_ = false;
};

inline std::string to_string(const Interval& i) {
    return std::string(i.lo_open() ? "(" : "[") + to_string(i.lo()) + "," + to_string(i.hi()) + (i.hi_open() ? ")" : "]");
}

inline std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << to_string(i); }

/// Parses the textual form produced by `to_string` (whitespace tolerated).
inline Interval parse_interval(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact.push_back(c);
    auto fail = [&] { return InputError("malformed interval '" + std::string(text) + "'"); };
    if (compact.size() < 5) throw fail();
    char open = compact.front();
    char close = compact.back();
    if ((open != '[' && open != '(') || (close != ']' && close != ')')) throw fail();
    auto inner = std::string_view(compact).substr(1, compact.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos) throw fail();
    return Interval(parse_time_point(inner.substr(0, comma)), open == '(', parse_time_point(inner.substr(comma + 1)),
                    close == ')');
}

/// A `rho` usable inside a temporal operator: left endpoint finite and >= 0.
inline bool is_non_negative(const Interval& rho) { return rho.lo().is_finite() && rho.lo().value() >= 0; }

inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    TimePoint lo = a.lo();
    bool lo_open = a.lo_open();
    if (b.lo() > lo || (b.lo() == lo && b.lo_open())) {
        lo = b.lo();
        lo_open = b.lo_open() || (a.lo() == b.lo() && a.lo_open());
    }
    TimePoint hi = a.hi();
    bool hi_open = a.hi_open();
    if (b.hi() < hi || (b.hi() == hi && b.hi_open())) {
        hi = b.hi();
        hi_open = b.hi_open() || (a.hi() == b.hi() && a.hi_open());
    }
    return Interval::make(std::move(lo), lo_open, std::move(hi), hi_open);
}

/// Minkowski sum `{x + y : x in a, y in b}`.
inline Interval minkowski_sum(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.lo_open() || b.lo_open(), a.hi() + b.hi(), a.hi_open() || b.hi_open());
}

/// `{-x : x in a}`
inline Interval negate(const Interval& a) { return Interval(-a.hi(), a.hi_open(), -a.lo(), a.lo_open()); }

/// Points where `diamondminus[rho] A` holds when A holds exactly on `i`.
inline Interval diamond_minus_apply(const Interval& i, const Interval& rho) {
    if (!is_non_negative(rho)) throw InputError("temporal interval must be non-negative: " + to_string(rho));
    return minkowski_sum(i, rho);
}

/// Points where `boxminus[rho] A` holds when A holds exactly on `i`, i.e. all
/// t with `t - rho` contained in `i`.
inline std::optional<Interval> box_minus_apply(const Interval& i, const Interval& rho) {
    if (!is_non_negative(rho)) throw InputError("temporal interval must be non-negative: " + to_string(rho));
    // lower side: t - rho.hi must stay inside i; equality is fine unless the
    // point t - rho.hi is reached (rho.hi closed) while i.lo is excluded.
    TimePoint lo;
    bool lo_open = true;
    if (i.lo().is_neg_inf()) {
        lo = TimePoint::neg_infinity();
    } else if (rho.hi().is_pos_inf()) {
        return std::nullopt;
    } else {
        lo = i.lo() + rho.hi();
        lo_open = i.lo_open() && !rho.hi_open();
    }
    TimePoint hi;
    bool hi_open = true;
    if (i.hi().is_pos_inf()) {
        hi = TimePoint::infinity();
    } else {
        hi = i.hi() + rho.lo();
        hi_open = i.hi_open() && !rho.lo_open();
    }
    return Interval::make(std::move(lo), lo_open, std::move(hi), hi_open);
}

inline Interval shift(const Interval& i, const Rational& d) {
    return Interval(i.lo() + TimePoint(d), i.lo_open(), i.hi() + TimePoint(d), i.hi_open());
}

inline std::optional<Interval> clip(const Interval& i, const Interval& window) { return intersect(i, window); }

/// Smallest positive rational that every input divides with an integer
/// quotient. Inputs must be finite and positive.
inline Rational lcm_rationals(std::span<const Rational> values) {
    if (values.empty()) throw InputError("lcm of an empty set");
    Integer common_den = 1;
    for (const auto& v : values) {
        if (v <= 0) throw InputError("lcm input must be positive, got " + format_rational(v));
        common_den = boost::multiprecision::lcm(common_den, denominator_of(v));
    }
    Integer acc = 1;
    for (const auto& v : values) {
        Rational scaled = v * common_den;
        acc = boost::multiprecision::lcm(acc, numerator_of(scaled));
    }
    return Rational(acc, common_den);
}

}  // namespace dmtl
