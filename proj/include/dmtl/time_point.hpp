#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "dmtl/error.hpp"

namespace dmtl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Largest integer <= r.
inline Integer floor_of(const Rational& r) {
    Integer num = numerator_of(r);
    Integer den = denominator_of(r);  // always positive
    Integer q = num / den;            // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

/// Smallest integer >= r.
inline Integer ceil_of(const Rational& r) { return -floor_of(-r); }

inline std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw ArithmeticError("integer out of 64-bit range: " + v.str());
    return v.convert_to<std::int64_t>();
}

/// Renders `p/q`, or just `p` for integers.
inline std::string format_rational(const Rational& r) {
    Integer den = denominator_of(r);
    if (den == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + den.str();
}

/// Accepts `12`, `-3`, `1.25`, `3/4`, `-7/2`.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { return InputError("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    bool negative = false;
    std::string_view body = text;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) throw fail();
        Integer d{std::string(den)};
        if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        value = Rational(Integer(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !digits_only(whole)) || !digits_only(frac)) throw fail();
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
        value = Rational(w * scale + Integer(std::string(frac)), scale);
    } else {
        if (!digits_only(body)) throw fail();
        value = Rational(Integer(std::string(body)));
    }
    return negative ? Rational(-value) : value;
}

/// A point on the rational timeline extended with -inf and +inf.
class TimePoint {
  public:
    TimePoint() = default;
    TimePoint(Rational value) : value_(std::move(value)) {}
    TimePoint(int value) : value_(value) {}
    TimePoint(long value) : value_(value) {}
    TimePoint(long long value) : value_(value) {}

    static TimePoint infinity() { return TimePoint(Kind::PosInf); }
    static TimePoint neg_infinity() { return TimePoint(Kind::NegInf); }

    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

    const Rational& value() const {
        if (!is_finite()) throw ArithmeticError("value() of an infinite time point");
        return value_;
    }

    friend std::strong_ordering operator<=>(const TimePoint& a, const TimePoint& b) {
        if (a.kind_ != b.kind_ || !a.is_finite()) return a.kind_ <=> b.kind_;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const TimePoint& a, const TimePoint& b) { return (a <=> b) == 0; }

    friend TimePoint operator-(const TimePoint& a) {
        if (a.is_pos_inf()) return neg_infinity();
        if (a.is_neg_inf()) return infinity();
        return TimePoint(Rational(-a.value_));
    }

    friend TimePoint operator+(const TimePoint& a, const TimePoint& b) {
        if (a.is_finite() && b.is_finite()) return TimePoint(Rational(a.value_ + b.value_));
        if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
            throw ArithmeticError("inf - inf is undefined");
        return a.is_finite() ? b : a;
    }
    friend TimePoint operator-(const TimePoint& a, const TimePoint& b) { return a + (-b); }

    friend TimePoint operator*(const TimePoint& a, const Rational& k) {
        if (a.is_finite()) return TimePoint(Rational(a.value_ * k));
        if (k == 0) throw ArithmeticError("inf * 0 is undefined");
        return (k > 0) == a.is_pos_inf() ? infinity() : neg_infinity();
    }

  private:
    enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };
    explicit TimePoint(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::Finite;
    Rational value_{0};
};

inline std::string to_string(const TimePoint& t) {
    if (t.is_pos_inf()) return "inf";
    if (t.is_neg_inf()) return "-inf";
    return format_rational(t.value());
}

inline std::ostream& operator<<(std::ostream& os, const TimePoint& t) { return os << to_string(t); }

/// Accepts everything `parse_rational` does plus `inf`, `+inf`, `-inf`.
inline TimePoint parse_time_point(std::string_view text) {
    if (text == "inf" || text == "+inf") return TimePoint::infinity();
    if (text == "-inf") return TimePoint::neg_infinity();
    return TimePoint(parse_rational(text));
}

}  // namespace dmtl
