#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace avoidance {

// All number-theoretic values in this library are exact: unbounded integers
// and rationals.  There is deliberately no floating-point fast path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_even(const Int& v) { return v % 2 == 0; }
inline bool is_odd(const Int& v) { return !is_even(v); }

// floor(r) for an arbitrary rational (cpp_rational keeps denominator > 0).
inline Int rat_floor(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

// Nearest integer to r, rounding half up.  Callers in this library only use
// it where ties are impossible.
inline Int rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

}  // namespace avoidance
