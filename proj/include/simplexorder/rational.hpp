#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace simplexorder {

using BigInt = boost::multiprecision::cpp_int;

//! Exact rational, kept in reduced form with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k)
        r *= k;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j; // always divides: r is C(n-k+j, j) after each step
    }
    return r;
}

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1)
            r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline double ipow(double base, unsigned exp) {
    double r = 1.0;
    while (exp) {
        if (exp & 1)
            r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

//! "num/den" rendering, e.g. "11/18"; integers print without the "/1".
inline std::string to_fraction_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace simplexorder
