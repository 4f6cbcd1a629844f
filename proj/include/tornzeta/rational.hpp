#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "tornzeta/types.hpp"

namespace tornzeta {

// Exact rational arithmetic is delegated to Boost.Multiprecision; cpp_rational
// keeps values reduced with a positive denominator, which is exactly the
// invariant this library needs.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p/q" (or just "p" when q == 1), the CLI's exact-value wire format.
inline std::string rat_str(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

inline BigInt factorial_big(long n) {
    BigInt f = 1;
    for (long k = 2; k <= n; ++k) f *= k;
    return f;
}

inline BigInt binom_big(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (long j = 1; j <= k; ++j) {
        b *= (n - k + j);
        b /= j;
    }
    return b;
}

}  // namespace tornzeta
