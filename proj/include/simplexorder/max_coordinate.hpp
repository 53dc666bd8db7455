#pragma once

#include "simplexorder/dd.hpp"
#include "simplexorder/identities.hpp"
#include "simplexorder/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace simplexorder {

//! Parameters of the max-coordinate distribution for Theta ~ U(simplex of
//! size u). n = 1 is allowed as the degenerate point mass at u.
struct MaxDistParams {
    int n;
    double u;

    MaxDistParams(int n_, double u_) : n(n_), u(u_) {
        if (n < 1)
            throw std::domain_error("MaxDistParams: n must be >= 1");
        if (!(u > 0.0))
            throw std::domain_error("MaxDistParams: u must be positive");
    }
};

//! The breakpoint index: the unique m in [0, n-2] with
//! u/(n-m) < b <= u/(n-m-1). b exactly at a breakpoint belongs to the lower m.
inline int m_index(const MaxDistParams& params, double b) {
    const int n = params.n;
    const double u = params.u;
    if (n < 2 || !(b > u / n) || !(b <= u))
        throw std::domain_error("m_index: b must lie in (u/n, u]");
    int m = n - 1 - static_cast<int>(std::floor(u / b));
    if (m < 0)
        m = 0;
    if (m > n - 2)
        m = n - 2;
    // settle fp-boundary cases with the defining comparisons
    while (m < n - 2 && b > u / (n - m - 1))
        ++m;
    while (m > 0 && b <= u / (n - m))
        --m;
    return m;
}

namespace detail {

//! Whitworth partial sum with an explicit branch index m (also the test hook
//! for continuity across breakpoints), in double-double: terms reach
//! C(n, n/2) (n-1)^(n-1) near b = u while the sum stays in [0,1], and plain
//! doubles lose monotonicity at the 1e-12 level already for n ~ 12.
//! Binomial coefficients stay exact in doubles through the integer
//! recurrence for every n <= 52.
inline double whitworth_sum(int n, double u, double b, int m) {
    DD acc{0.0, 0.0};
    double coef = 1.0; // C(n,k), exact while below 2^53
    for (int k = 0; k <= m; ++k) {
        if (k > 0)
            coef = coef * (n - k + 1) / k;
        const DD prod = two_prod(static_cast<double>(n - k), b);
        DD base = dd_add(two_sum(prod.hi, -u), DD{prod.lo, 0.0});
        base = dd_div_d(base, u);
        const DD term = dd_mul_d(dd_pow(base, static_cast<unsigned>(n - 1)),
                                 (k % 2 == 0) ? coef : -coef);
        acc = dd_add(acc, term);
    }
    return acc.hi;
}

} // namespace detail

//! Whitworth's formula: P(max(Theta) <= b) =
//! (1/u^(n-1)) sum_{k=0}^{m} C(n,k) (-1)^k ((n-k)b - u)^(n-1).
//! Total on the reals: 0 for b <= u/n, 1 for b >= u. The alternating sum is
//! numerically trustworthy for n <= 30 (terms up to C(n, n/2)).
inline double whitworth_cdf(const MaxDistParams& params, double b) {
    const int n = params.n;
    const double u = params.u;
    if (b >= u)
        return 1.0;
    if (n == 1 || b <= u / n)
        return 0.0;
    const int m = m_index(params, b);
    const double acc = detail::whitworth_sum(n, u, b, m);
    return acc < 0.0 ? 0.0 : (acc > 1.0 ? 1.0 : acc);
}

//! E[max(Theta)^t] on the probability simplex (u = 1), exact:
//! f(n,t) / C(n-1+t, t). t = 0 gives 1.
inline Rational moment_rational(int n, int t) {
    if (n < 1 || t < 0)
        throw std::domain_error("moment_rational: need n >= 1, t >= 0");
    return f_nt(n, t) / Rational(binomial(static_cast<unsigned>(n - 1 + t),
                                          static_cast<unsigned>(t)));
}

//! E[max(Theta)^t] for the simplex of size u: u^t times the u = 1 moment.
inline double moment(const MaxDistParams& params, int t) {
    if (t < 0)
        throw std::domain_error("moment: t must be >= 0");
    return std::pow(params.u, t) * to_double(moment_rational(params.n, t));
}

//! Var(max(Theta)) on the probability simplex, exact, as the moment
//! difference E[max^2] - E[max]^2.
inline Rational variance_rational(int n) {
    const Rational m1 = moment_rational(n, 1);
    return moment_rational(n, 2) - m1 * m1;
}

//! The closed form of the variance in harmonic numbers:
//! (1/(n^2 (n+1))) (n H_n^(2) - H_n^2). Second route, used as a cross-check.
inline Rational variance_harmonic_form(int n) {
    if (n < 1)
        throw std::domain_error("variance_harmonic_form: n must be >= 1");
    if (n == 1)
        return 0;
    const Rational h1 = harmonic(n, 1);
    const Rational h2 = harmonic(n, 2);
    return (n * h2 - h1 * h1) / (Rational(n) * n * (n + 1));
}

inline double variance(const MaxDistParams& params) {
    return params.u * params.u * to_double(variance_rational(params.n));
}

} // namespace simplexorder
