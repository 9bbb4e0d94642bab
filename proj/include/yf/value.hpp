#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "yf/rational.hpp"

namespace yf {

/// Exact rational, or a closed interval certified to contain the true
/// value. Exact values are zero-width intervals; all arithmetic is outward.
struct Value {
    Rational lo{0};
    Rational hi{0};

    Value() = default;
    Value(const Rational& r) : lo(r), hi(r) {}  // implicit: exact values embed
    Value(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Value: lo > hi");
    }

    static Value exact(const Rational& r) { return Value(r); }
    static Value interval(const Rational& l, const Rational& h) { return Value(l, h); }

    bool is_exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    /// The exact rational; throws when only an enclosure is known.
    const Rational& exact_value() const {
        if (!is_exact()) throw std::logic_error("Value: not exact");
        return lo;
    }
    double midpoint_double() const { return to_double((lo + hi) / 2); }

    friend Value operator+(const Value& a, const Value& b) {
        return Value(a.lo + b.lo, a.hi + b.hi);
    }
    friend Value operator-(const Value& a) { return Value(-a.hi, -a.lo); }
    friend Value operator-(const Value& a, const Value& b) { return a + (-b); }
    friend Value operator*(const Value& a, const Value& b) {
        Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
        return Value(std::min(std::min(c1, c2), std::min(c3, c4)),
                     std::max(std::max(c1, c2), std::max(c3, c4)));
    }
    friend Value operator*(const Rational& c, const Value& a) { return Value(c) * a; }
    friend Value operator*(const Value& a, const Rational& c) { return a * Value(c); }
    Value& operator+=(const Value& o) { return *this = *this + o; }
    Value& operator*=(const Value& o) { return *this = *this * o; }

    friend bool operator==(const Value& a, const Value& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

enum class RoundDir { nearest, down, up };

/// Fixed-point decimal rendering of a rational, deterministic across
/// platforms; `down`/`up` round toward -inf/+inf for interval endpoints.
inline std::string decimal_string(const Rational& r, int frac_digits = 12,
                                  RoundDir dir = RoundDir::nearest) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Int num = numerator(r);
    Int den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = 1;
    for (int i = 0; i < frac_digits; ++i) scale *= 10;
    Int scaled = num * scale;
    Int q = scaled / den;
    Int rem = scaled % den;
    if (rem != 0) {
        switch (dir) {
            case RoundDir::nearest:
                if (2 * rem >= den) ++q;
                break;
            case RoundDir::down:
                if (neg) ++q;
                break;
            case RoundDir::up:
                if (!neg) ++q;
                break;
        }
    }
    Int ip = q / scale;
    Int fp = q % scale;
    std::string s = (neg && q != 0 ? "-" : "") + ip.str();
    if (frac_digits > 0) {
        std::string frac = fp.str();
        if (frac.size() < static_cast<std::size_t>(frac_digits))
            frac.insert(frac.begin(),
                        static_cast<std::size_t>(frac_digits) - frac.size(), '0');
        s += "." + frac;
    }
    return s;
}

inline std::string value_to_string(const Value& v) {
    if (v.is_exact()) return rational_to_string(v.lo);
    return "[" + decimal_string(v.lo, 15, RoundDir::down) + ", " +
           decimal_string(v.hi, 15, RoundDir::up) + "]";
}

}  // namespace yf
