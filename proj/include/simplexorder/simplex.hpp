#pragma once

#include "simplexorder/rational.hpp"
#include "simplexorder/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace simplexorder {

//! Absolute tolerance for the "coordinates sum to u" invariant.
inline double simplex_sum_tolerance(double u) {
    return 1e-12 * std::max(1.0, u);
}

//! A point of the n-simplex of size u: n nonnegative coordinates summing to u.
class SimplexVector {
  public:
    SimplexVector(std::vector<double> coords, double size_u)
        : coords_(std::move(coords)), u_(size_u) {
        if (coords_.empty())
            throw std::domain_error("SimplexVector: length must be >= 1");
        if (!(u_ > 0.0))
            throw std::domain_error("SimplexVector: size u must be positive");
        double sum = 0.0;
        for (double c : coords_) {
            if (!(c >= 0.0))
                throw std::domain_error("SimplexVector: negative coordinate");
            sum += c;
        }
        if (std::abs(sum - u_) > simplex_sum_tolerance(u_))
            throw std::domain_error("SimplexVector: coordinates do not sum to u");
    }

    const std::vector<double>& coords() const { return coords_; }
    double size_u() const { return u_; }
    std::size_t n() const { return coords_.size(); }

    double max_coord() const {
        return *std::max_element(coords_.begin(), coords_.end());
    }

  private:
    std::vector<double> coords_;
    double u_;
};

namespace detail {

//! Spacings of already-sorted points in [0,1], scaled to total mass u.
//! out must have points.size()+1 slots.
inline void spacings_from_sorted(std::span<const double> points, double u,
                                 std::span<double> out) {
    const std::size_t n = points.size();
    double prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = u * (points[i] - prev);
        prev = points[i];
    }
    out[n] = u * (1.0 - prev);
}

//! Draw a uniform point of the simplex of dimension out.size() into out,
//! using the spacings construction. scratch must have out.size()-1 slots.
inline void sample_spacings_into(std::span<double> out, double u,
                                 std::span<double> scratch, RandomStream& stream) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        scratch[i] = stream.next_unit();
    std::sort(scratch.begin(), scratch.begin() + (n - 1));
    spacings_from_sorted(scratch.subspan(0, n - 1), u, out);
}

} // namespace detail

//! Map n points of [0,1] to the spacings point of the (n+1)-simplex of size u:
//! sort, take consecutive differences against the augmented endpoints 0 and 1,
//! scale by u. Ties are kept (stable sort order) and yield zero coordinates.
inline SimplexVector spacings(std::span<const double> points, double u) {
    if (!(u > 0.0))
        throw std::domain_error("spacings: size u must be positive");
    for (double p : points) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::domain_error("spacings: point outside [0,1]");
    }
    std::vector<double> sorted(points.begin(), points.end());
    std::stable_sort(sorted.begin(), sorted.end());
    std::vector<double> coords(points.size() + 1);
    detail::spacings_from_sorted(sorted, u, coords);
    return SimplexVector(std::move(coords), u);
}

//! Uniform draw from the n-simplex of size u via sorted-uniform spacings.
inline SimplexVector sample_spacings(int n, double u, Seed seed) {
    if (n < 1)
        throw std::domain_error("sample_spacings: n must be >= 1");
    if (!(u > 0.0))
        throw std::domain_error("sample_spacings: size u must be positive");
    RandomStream stream(seed);
    std::vector<double> coords(static_cast<std::size_t>(n));
    std::vector<double> scratch(static_cast<std::size_t>(n - 1));
    detail::sample_spacings_into(coords, u, scratch, stream);
    return SimplexVector(std::move(coords), u);
}

//! Uniform draw from the n-simplex of size u via normalized iid exponentials.
//! Same distribution as sample_spacings, different construction.
inline SimplexVector sample_exponential(int n, double u, Seed seed) {
    if (n < 1)
        throw std::domain_error("sample_exponential: n must be >= 1");
    if (!(u > 0.0))
        throw std::domain_error("sample_exponential: size u must be positive");
    RandomStream stream(seed);
    std::vector<double> coords(static_cast<std::size_t>(n));
    double total = 0.0;
    for (double& c : coords) {
        c = -std::log1p(-stream.next_unit());
        total += c;
    }
    if (n == 1 || total <= 0.0) {
        // total == 0 needs every variate to be exactly 0; resolve degenerately
        std::fill(coords.begin(), coords.end(), u / n);
    } else {
        for (double& c : coords)
            c *= u / total;
    }
    return SimplexVector(std::move(coords), u);
}

//! Joint CDF P(Theta_1 <= theta_1, ..., Theta_n <= theta_n) for
//! Theta ~ U(simplex of size u): inclusion-exclusion over all 2^n subsets K of
//! (max{u - sum_{k in K} theta_k, 0})^(n-1) / u^(n-1), and 0 whenever some
//! theta_i <= 0. Enumeration is capped at n = 25.
inline double joint_cdf(std::span<const double> theta, double u) {
    const std::size_t n = theta.size();
    if (n == 0)
        throw std::domain_error("joint_cdf: empty theta");
    if (!(u > 0.0))
        throw std::domain_error("joint_cdf: size u must be positive");
    if (n > 25)
        throw std::length_error("joint_cdf: n > 25 exceeds the 2^n enumeration cap");
    for (double t : theta)
        if (!(t > 0.0))
            return 0.0;
    if (n == 1)
        return theta[0] >= u ? 1.0 : 0.0;

    // Scale invariance: evaluate on the probability simplex.
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i)
        scaled[i] = theta[i] / u;

    // Gray-code walk over subsets: one coordinate toggles per step.
    const unsigned exp = static_cast<unsigned>(n - 1);
    const std::uint64_t count = std::uint64_t{1} << n;
    double subset_sum = 0.0;
    int parity = 0; // |K| mod 2
    double acc = 1.0, comp = 0.0; // Kahan-compensated alternating sum; K = {} term
    for (std::uint64_t i = 1; i < count; ++i) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
        const std::uint64_t gray = i ^ (i >> 1);
        if (gray & (std::uint64_t{1} << bit)) {
            subset_sum += scaled[bit];
            ++parity;
        } else {
            subset_sum -= scaled[bit];
            --parity;
        }
        const double base = 1.0 - subset_sum;
        if (base <= 0.0)
            continue;
        const double term = ipow(base, exp);
        const double y = ((parity & 1) ? -term : term) - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return std::clamp(acc, 0.0, 1.0);
}

//! Joint tail probability P(Theta_1 > theta_1, ..., Theta_n > theta_n) for
//! nonnegative theta: (max{u - sum theta_k, 0} / u)^(n-1).
inline double tail_prob(std::span<const double> theta, double u) {
    const std::size_t n = theta.size();
    if (n == 0)
        throw std::domain_error("tail_prob: empty theta");
    if (!(u > 0.0))
        throw std::domain_error("tail_prob: size u must be positive");
    double sum = 0.0;
    for (double t : theta) {
        if (!(t >= 0.0))
            throw std::domain_error("tail_prob: negative coordinate");
        sum += t;
    }
    const double slack = u - sum;
    if (slack <= 0.0)
        return 0.0;
    return ipow(slack / u, static_cast<unsigned>(n - 1));
}

//! Volume of the n-simplex of size u: sqrt(n) u^(n-1) / (n-1)!.
inline double simplex_volume(int n, double u) {
    if (n < 1)
        throw std::domain_error("simplex_volume: n must be >= 1");
    if (!(u > 0.0))
        throw std::domain_error("simplex_volume: size u must be positive");
    if (n <= 170)
        return std::sqrt(static_cast<double>(n)) * std::pow(u, n - 1) /
               std::tgamma(static_cast<double>(n));
    return std::exp(0.5 * std::log(static_cast<double>(n)) +
                    (n - 1) * std::log(u) - std::lgamma(static_cast<double>(n)));
}

} // namespace simplexorder
