#pragma once

#include "simplexorder/rational.hpp"
#include "simplexorder/simplex.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simplexorder {

//! The three stochastic orders with known restrictiveness on the simplex.
enum class OrderKind { ST, HR, LR };

inline std::string_view order_name(OrderKind k) {
    switch (k) {
    case OrderKind::ST: return "st";
    case OrderKind::HR: return "hr";
    case OrderKind::LR: return "lr";
    }
    return "?";
}

inline OrderKind parse_order(std::string_view s) {
    if (s == "st") return OrderKind::ST;
    if (s == "hr") return OrderKind::HR;
    if (s == "lr") return OrderKind::LR;
    throw std::domain_error("unknown order: " + std::string(s));
}

namespace detail {

inline void suffix_sums_into(std::span<const double> coords, std::span<double> out) {
    const std::size_t n = coords.size();
    double acc = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        acc += coords[i];
        out[i] = acc;
    }
}

//! st: every suffix sum of a dominated by b's.
inline bool st_holds(std::span<const double> sa, std::span<const double> sb,
                     double eps) {
    for (std::size_t i = 0; i < sa.size(); ++i)
        if (sa[i] > sb[i] + eps)
            return false;
    return true;
}

//! hr, definitional scan: sa[i]*sb[j] >= sa[j]*sb[i] for all i <= j.
inline bool hr_holds_definitional(std::span<const double> sa,
                                  std::span<const double> sb, double eps) {
    const std::size_t n = sa.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (sa[i] * sb[j] < sa[j] * sb[i] - eps)
                return false;
    return true;
}

//! hr, adjacent cross-products only. Equivalent to the definitional scan:
//! the product inequalities chain across indices, and a vanished suffix on
//! either side propagates through the raw products without any division.
inline bool hr_holds_adjacent(std::span<const double> sa,
                              std::span<const double> sb, double eps) {
    const std::size_t n = sa.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (sa[i] * sb[i + 1] < sa[i + 1] * sb[i] - eps)
            return false;
    return true;
}

//! lr: a_i*b_j >= b_i*a_j for all i <= j (ratio b_k/a_k nondecreasing where
//! defined). Zero coordinates are handled by the product form; the adjacent
//! shortcut is NOT valid here when a middle coordinate vanishes.
inline bool lr_holds(std::span<const double> a, std::span<const double> b,
                     double eps) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[i] * b[j] < b[i] * a[j] - eps)
                return false;
    return true;
}

inline void check_comparable(const SimplexVector& a, const SimplexVector& b) {
    if (a.n() != b.n())
        throw std::domain_error("order comparison: mismatched lengths");
    if (a.size_u() != b.size_u())
        throw std::domain_error("order comparison: mismatched simplex sizes");
}

} // namespace detail

//! Suffix sums S_i = sum_{k=i}^{n} theta_k; nonincreasing, S_1 = u.
struct SuffixSums {
    std::vector<double> sums;

    static SuffixSums of(const SimplexVector& v) {
        SuffixSums s;
        s.sums.resize(v.n());
        detail::suffix_sums_into(v.coords(), s.sums);
        return s;
    }
};

//! a <= b in the usual stochastic order. eps is an additive comparison slack
//! for rounded user data; the default 0 compares strictly.
inline bool leq_st(const SimplexVector& a, const SimplexVector& b, double eps = 0.0) {
    detail::check_comparable(a, b);
    const auto sa = SuffixSums::of(a), sb = SuffixSums::of(b);
    return detail::st_holds(sa.sums, sb.sums, eps);
}

//! a <= b in the hazard rate order; definitional O(n^2) scan over all pairs
//! i <= j of suffix-sum cross products.
inline bool leq_hr(const SimplexVector& a, const SimplexVector& b, double eps = 0.0) {
    detail::check_comparable(a, b);
    const auto sa = SuffixSums::of(a), sb = SuffixSums::of(b);
    return detail::hr_holds_definitional(sa.sums, sb.sums, eps);
}

//! O(n) fast path for the hazard rate order; agrees with leq_hr.
inline bool leq_hr_fast(const SimplexVector& a, const SimplexVector& b,
                        double eps = 0.0) {
    detail::check_comparable(a, b);
    const auto sa = SuffixSums::of(a), sb = SuffixSums::of(b);
    return detail::hr_holds_adjacent(sa.sums, sb.sums, eps);
}

//! a <= b in the likelihood ratio order.
inline bool leq_lr(const SimplexVector& a, const SimplexVector& b, double eps = 0.0) {
    detail::check_comparable(a, b);
    return detail::lr_holds(a.coords(), b.coords(), eps);
}

inline bool leq(OrderKind order, const SimplexVector& a, const SimplexVector& b,
                double eps = 0.0) {
    switch (order) {
    case OrderKind::ST: return leq_st(a, b, eps);
    case OrderKind::HR: return leq_hr(a, b, eps);
    case OrderKind::LR: return leq_lr(a, b, eps);
    }
    throw std::domain_error("leq: unknown order");
}

//! P(Theta <= Theta') for two independent uniform draws:
//! st -> 1/n, hr -> 1/2^(n-1), lr -> 1/n!, as exact rationals.
inline Rational restrictiveness_constant(OrderKind order, int n) {
    if (n < 1)
        throw std::domain_error("restrictiveness_constant: n must be >= 1");
    switch (order) {
    case OrderKind::ST: return Rational(1, n);
    case OrderKind::HR: return Rational(1, BigInt(1) << (n - 1));
    case OrderKind::LR: return Rational(1, factorial(static_cast<unsigned>(n)));
    }
    throw std::domain_error("restrictiveness_constant: unknown order");
}

//! P(Theta >=hr theta) for a fresh uniform draw Theta:
//! prod_{i=1}^{n-1} (S_i^(n-i) - S_{i+1}^(n-i)) / S_i^(n-i), evaluated as
//! 1 - (S_{i+1}/S_i)^(n-i). A factor with S_i = 0 contributes 1: its
//! conditioning event is trivial (the entire remaining mass is already 0).
inline double hr_upper_prob(const SimplexVector& theta) {
    const std::size_t n = theta.n();
    std::vector<double> s(n);
    detail::suffix_sums_into(theta.coords(), s);
    double prod = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s[i] <= 0.0)
            continue;
        const double ratio = s[i + 1] / s[i];
        prod *= 1.0 - ipow(ratio, static_cast<unsigned>(n - 1 - i));
    }
    return prod;
}

namespace detail {

inline bool hr_reduce_impl(std::vector<double> a, std::vector<double> b, double u) {
    while (true) {
        const std::size_t n = a.size();
        if (n == 1)
            return true;
        double a_tail = 0.0, b_tail = 0.0;
        for (std::size_t i = 1; i < n; ++i) {
            a_tail += a[i];
            b_tail += b[i];
        }
        if (b_tail <= 0.0)
            return a_tail <= 0.0; // b = (u,0,...,0) dominates only itself
        if (!(b[0] <= a[0]))
            return false;
        if (a_tail <= 0.0)
            return true; // a = (u,0,...,0) is below everything
        const double u_next = u - b[0];
        const double rescale = u_next / a_tail; // 1/v
        std::vector<double> a_next(n - 1), b_next(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            a_next[i - 1] = a[i] * rescale;
            b_next[i - 1] = b[i];
        }
        a = std::move(a_next);
        b = std::move(b_next);
        u = u_next;
    }
}

} // namespace detail

//! Independent oracle for leq_hr: dimension reduction on the first
//! coordinate, comparing rescaled tails in the (n-1)-simplex of size u - b_1.
inline bool hr_reduce(const SimplexVector& a, const SimplexVector& b) {
    detail::check_comparable(a, b);
    if (a.coords() == b.coords())
        return true; // reflexive; avoids rescaling round-off on exact ties
    return detail::hr_reduce_impl(a.coords(), b.coords(), a.size_u());
}

} // namespace simplexorder
