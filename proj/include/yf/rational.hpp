#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace yf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rational: zero to negative power");
        return 1 / pow_rational(base, -e);
    }
    Rational r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Prints "p" for integers, "p/q" otherwise (boost's native format).
inline std::string rational_to_string(const Rational& r) { return r.str(); }

/// Accepts "p", "p/q" and plain decimals like "0.25" or "-1.5".
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(text);
    bool neg = text[0] == '-';
    std::string digits = text.substr(neg ? 1 : 0);
    dot = digits.find('.');
    std::string intpart = digits.substr(0, dot);
    std::string fracpart = digits.substr(dot + 1);
    if (intpart.empty()) intpart = "0";
    for (char c : intpart + fracpart)
        if (c < '0' || c > '9') throw std::invalid_argument("parse_rational: bad decimal " + text);
    Int num(intpart.empty() ? "0" : intpart);
    Int den = 1;
    for (char c : fracpart) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational r(num, den);
    return neg ? -r : r;
}

/// Largest r with r^k <= a; second element reports whether r^k == a exactly.
inline std::pair<Int, bool> integer_kth_root(const Int& a, unsigned k) {
    if (a < 0) throw std::invalid_argument("integer_kth_root: negative radicand");
    if (k == 0) throw std::invalid_argument("integer_kth_root: k = 0");
    if (a == 0 || a == 1 || k == 1) return {a, true};
    Int lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, k) <= a) hi <<= 1;
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, k) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, boost::multiprecision::pow(lo, k) == a};
}

/// Exact k-th root of a non-negative rational, if one exists.
inline std::pair<Rational, bool> rational_kth_root(const Rational& r, unsigned k) {
    if (r < 0) return {Rational(0), false};
    auto [np, nok] = integer_kth_root(boost::multiprecision::numerator(r), k);
    auto [dp, dok] = integer_kth_root(boost::multiprecision::denominator(r), k);
    if (!nok || !dok) return {Rational(0), false};
    return {Rational(np, dp), true};
}

}  // namespace yf
