#pragma once

#include "simplexorder/dd.hpp"
#include "simplexorder/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace simplexorder {

//! Generalized harmonic number H_n^(t) = sum_{s=1}^{n} 1/s^t, exact.
inline Rational harmonic(int n, int t) {
    if (n < 1 || t < 1)
        throw std::domain_error("harmonic: n and t must be >= 1");
    Rational h = 0;
    for (int s = 1; s <= n; ++s)
        h += Rational(1, ipow(BigInt(s), static_cast<unsigned>(t)));
    return h;
}

//! f(n,t) = sum_{k=1}^{n} (-1)^(k-1) C(n,k) / k^t via the all-positive
//! two-term recursion f(n,t) = f(n-1,t) + f(n,t-1)/n, f(n,0) = f(1,t) = 1.
inline Rational f_nt(int n, int t) {
    if (n < 1 || t < 0)
        throw std::domain_error("f_nt: need n >= 1, t >= 0");
    if (n == 1 || t == 0)
        return 1;
    // prev holds f(1..n, s-1); roll forward one s at a time.
    std::vector<Rational> prev(static_cast<std::size_t>(n) + 1, 1);
    std::vector<Rational> cur(static_cast<std::size_t>(n) + 1);
    for (int s = 1; s <= t; ++s) {
        cur[1] = 1;
        for (int m = 2; m <= n; ++m)
            cur[static_cast<std::size_t>(m)] =
                cur[static_cast<std::size_t>(m) - 1] +
                prev[static_cast<std::size_t>(m)] / m;
        prev.swap(cur);
    }
    return prev[static_cast<std::size_t>(n)];
}

//! The defining alternating sum of f(n,t), exact; cross-check route.
inline Rational f_nt_alternating(int n, int t) {
    if (n < 1 || t < 0)
        throw std::domain_error("f_nt_alternating: need n >= 1, t >= 0");
    Rational sum = 0;
    for (int k = 1; k <= n; ++k) {
        Rational term(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)),
                      ipow(BigInt(k), static_cast<unsigned>(t)));
        if (k % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

//! Exact check of the closed forms f(n,1) = H_n and
//! f(n,2) = (H_n^2 + H_n^(2)) / 2.
inline bool f_closed_forms_check(int n) {
    if (n < 1)
        throw std::domain_error("f_closed_forms_check: n must be >= 1");
    const Rational h1 = harmonic(n, 1);
    const Rational h2 = harmonic(n, 2);
    return f_nt(n, 1) == h1 && f_nt(n, 2) == (h1 * h1 + h2) / 2;
}

//! sum_{l=i+1}^{t+1} (-1)^(t+l-1) C(n-1+t, n+l-2) C(n+l-2, n+i-1),
//! exact; equals 0 for i < t and 1 for i = t.
inline BigInt let_identity(int n, int t, int i) {
    if (n < 2 || t < 1 || i < 0 || i > t)
        throw std::domain_error("let_identity: need n >= 2, t >= 1, 0 <= i <= t");
    BigInt sum = 0;
    for (int l = i + 1; l <= t + 1; ++l) {
        BigInt term = binomial(static_cast<unsigned>(n - 1 + t),
                               static_cast<unsigned>(n + l - 2)) *
                      binomial(static_cast<unsigned>(n + l - 2),
                               static_cast<unsigned>(n + i - 1));
        if ((t + l - 1) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

namespace detail {

//! Rational to double-double: leading double plus the rounded remainder.
inline DD dd_from_rational(const Rational& q) {
    const double hi = q.convert_to<double>();
    const double lo = Rational(q - Rational(hi)).convert_to<double>();
    return quick_two_sum(hi, lo);
}

} // namespace detail

//! F(x,y,n,r) = sum_{k=0}^{n-1} (-1)^k C(n,k) ((n-k)x - y)^(n-1+r) / (n-k)^r,
//! evaluated directly. The alternating terms dwarf the total on parts of the
//! grid, so the sum runs in double-double.
inline double F_xynr(double x, double y, int n, int r) {
    if (n < 1 || r < 0)
        throw std::domain_error("F_xynr: need n >= 1, r >= 0");
    detail::DD sum{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
        const double coef =
            binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))
                .convert_to<double>();
        const detail::DD prod = detail::two_prod(static_cast<double>(n - k), x);
        const detail::DD base = detail::dd_add(detail::two_sum(prod.hi, -y),
                                               detail::DD{prod.lo, 0.0});
        detail::DD term =
            detail::dd_pow(base, static_cast<unsigned>(n - 1 + r));
        term = detail::dd_div_d(term, ipow(static_cast<double>(n - k),
                                           static_cast<unsigned>(r)));
        term = detail::dd_mul_d(term, (k % 2 == 0) ? coef : -coef);
        sum = detail::dd_add(sum, term);
    }
    return sum.hi;
}

//! The reduced form of F(x,y,n,r):
//! sum_{i=0}^{r} x^(r-i) y^(n-1+i) C(n+r-1, n+i-1) (-1)^i f(n,i).
inline double F_xynr_reduced(double x, double y, int n, int r) {
    if (n < 1 || r < 0)
        throw std::domain_error("F_xynr_reduced: need n >= 1, r >= 0");
    detail::DD sum{0.0, 0.0};
    for (int i = 0; i <= r; ++i) {
        Rational coef(binomial(static_cast<unsigned>(n + r - 1),
                               static_cast<unsigned>(n + i - 1)));
        coef *= f_nt(n, i);
        if (i % 2 == 1)
            coef = -coef;
        detail::DD term = detail::dd_mul(
            detail::dd_pow(detail::DD{x, 0.0}, static_cast<unsigned>(r - i)),
            detail::dd_pow(detail::DD{y, 0.0}, static_cast<unsigned>(n - 1 + i)));
        term = detail::dd_mul(term, detail::dd_from_rational(coef));
        sum = detail::dd_add(sum, term);
    }
    return sum.hi;
}

//! Closed form of the incomplete-beta-difference integral
//!   int_{u/b}^{u/a} x^p (bx - u)^q dx
//! = (u/a)^(p+q+1) sum_{k=1}^{p+1} (-1)^(k-1) (b-a)^(q+k)
//!     prod_{j=1}^{k-1}(p-j+1) / (b^k prod_{j=1}^{k}(q+j)).
inline double beta_diff(double u, double a, double b, int p, int q) {
    if (!(u > 0.0) || !(a > 0.0) || !(b > 0.0))
        throw std::domain_error("beta_diff: u, a, b must be positive");
    if (a > b)
        throw std::domain_error("beta_diff: requires a <= b");
    if (p < 0 || q < 0)
        throw std::domain_error("beta_diff: p, q must be >= 0");
    const double d = b - a;
    double sum = 0.0;
    double num_prod = 1.0;  // prod_{j=1}^{k-1} (p-j+1)
    double den_prod = 1.0;  // prod_{j=1}^{k} (q+j), built incrementally
    double b_pow = 1.0;
    double d_pow = std::pow(d, q + 1);
    for (int k = 1; k <= p + 1; ++k) {
        den_prod *= q + k;
        b_pow *= b;
        const double term = d_pow * num_prod / (b_pow * den_prod);
        sum += (k % 2 == 1) ? term : -term;
        num_prod *= p - k + 1;
        d_pow *= d;
    }
    return std::pow(u / a, p + q + 1) * sum;
}

} // namespace simplexorder
