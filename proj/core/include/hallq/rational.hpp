#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hallq/errors.hpp"

namespace hallq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int int_pow(const Int& base, int e) {
    Int r = 1, b = base;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

inline Rational rational_pow(const Rational& base, int e) {
    if (e >= 0) {
        Rational r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    }
    if (base == 0) throw ValidationError("rational_pow: negative power of zero");
    Rational r = 1;
    for (int i = 0; i < -e; ++i) r /= base;
    return r;
}

/// "num/den" (den omitted when 1), both in base 10.
inline std::string rational_to_string(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

Rational rational_from_string(const std::string& s);

}  // namespace hallq
