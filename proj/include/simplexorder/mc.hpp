#pragma once

#include "simplexorder/orders.hpp"
#include "simplexorder/rng.hpp"
#include "simplexorder/simplex.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

namespace simplexorder {

//! Result of a seeded Monte Carlo estimator.
struct MCEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    Seed seed{};
    std::string_view generator = kGeneratorId;
};

namespace detail {

//! Fixed chunk size of the sample space. Chunk c draws from the stream
//! derive_stream(seed, c) and partial results are reduced in chunk order,
//! so estimates depend only on (inputs, seed), not on scheduling or the
//! worker count.
inline constexpr std::int64_t kChunkSamples = 1 << 16;

inline std::int64_t chunk_count(std::int64_t samples) {
    return (samples + kChunkSamples - 1) / kChunkSamples;
}

inline std::int64_t chunk_size(std::int64_t samples, std::int64_t chunk) {
    const std::int64_t begin = chunk * kChunkSamples;
    return std::min(kChunkSamples, samples - begin);
}

//! Runs fn(chunk_index, chunk_samples, stream) over all chunks on `workers`
//! threads. fn must only write to its own chunk's slot.
template <typename Fn>
void run_chunks(std::int64_t samples, Seed seed, int workers, Fn fn) {
    const std::int64_t chunks = chunk_count(samples);
    const int threads = static_cast<int>(
        std::min<std::int64_t>(std::max(workers, 1), chunks));
    if (threads <= 1) {
        for (std::int64_t c = 0; c < chunks; ++c) {
            RandomStream stream(derive_stream(seed, static_cast<std::uint64_t>(c)));
            fn(c, chunk_size(samples, c), stream);
        }
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto body = [&] {
        for (std::int64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
            RandomStream stream(derive_stream(seed, static_cast<std::uint64_t>(c)));
            fn(c, chunk_size(samples, c), stream);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i)
        pool.emplace_back(body);
    for (auto& t : pool)
        t.join();
}

//! Per-thread scratch for drawing and comparing pairs of simplex points.
struct PairScratch {
    std::vector<double> a, b, sa, sb, pts;

    explicit PairScratch(std::size_t n)
        : a(n), b(n), sa(n), sb(n), pts(n > 0 ? n - 1 : 0) {}

    void draw_pair(double u, RandomStream& stream) {
        sample_spacings_into(a, u, pts, stream);
        sample_spacings_into(b, u, pts, stream);
    }

    bool compares(OrderKind order) {
        switch (order) {
        case OrderKind::ST:
            suffix_sums_into(a, sa);
            suffix_sums_into(b, sb);
            return st_holds(sa, sb, 0.0);
        case OrderKind::HR:
            suffix_sums_into(a, sa);
            suffix_sums_into(b, sb);
            return hr_holds_definitional(sa, sb, 0.0);
        case OrderKind::LR:
            return lr_holds(a, b, 0.0);
        }
        return false;
    }
};

inline void require_samples(std::int64_t samples) {
    if (samples < 1)
        throw std::domain_error("monte carlo: samples must be >= 1");
}

} // namespace detail

//! Fraction of independent uniform pairs (Theta, Theta') with Theta <= Theta'
//! under `order`, with binomial standard error. Deterministic given
//! (inputs, seed) for every worker count.
inline MCEstimate mc_restrictiveness(OrderKind order, int n, std::int64_t samples,
                                     Seed seed, int workers = 1) {
    if (n < 2)
        throw std::domain_error("mc_restrictiveness: n must be >= 2");
    detail::require_samples(samples);
    const std::int64_t chunks = detail::chunk_count(samples);
    std::vector<std::int64_t> hits(static_cast<std::size_t>(chunks), 0);
    detail::run_chunks(samples, seed, workers,
                       [&](std::int64_t c, std::int64_t count, RandomStream& stream) {
                           detail::PairScratch scratch(static_cast<std::size_t>(n));
                           std::int64_t h = 0;
                           for (std::int64_t i = 0; i < count; ++i) {
                               scratch.draw_pair(1.0, stream);
                               h += scratch.compares(order) ? 1 : 0;
                           }
                           hits[static_cast<std::size_t>(c)] = h;
                       });
    std::int64_t total = 0;
    for (std::int64_t h : hits)
        total += h;
    const double p = static_cast<double>(total) / static_cast<double>(samples);
    MCEstimate est;
    est.estimate = p;
    est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    return est;
}

//! Empirical CDF of max(Theta) at each grid point, all points sharing one
//! sample set of `samples` spacings draws.
inline std::vector<MCEstimate> mc_max_cdf(int n, double u,
                                          std::span<const double> b_grid,
                                          std::int64_t samples, Seed seed) {
    if (n < 1)
        throw std::domain_error("mc_max_cdf: n must be >= 1");
    if (!(u > 0.0))
        throw std::domain_error("mc_max_cdf: u must be positive");
    detail::require_samples(samples);
    std::vector<double> maxes(static_cast<std::size_t>(samples));
    detail::run_chunks(samples, seed, 1,
                       [&](std::int64_t c, std::int64_t count, RandomStream& stream) {
                           std::vector<double> point(static_cast<std::size_t>(n));
                           std::vector<double> pts(static_cast<std::size_t>(n - 1));
                           double* out = maxes.data() + c * detail::kChunkSamples;
                           for (std::int64_t i = 0; i < count; ++i) {
                               detail::sample_spacings_into(point, u, pts, stream);
                               out[i] = *std::max_element(point.begin(), point.end());
                           }
                       });
    std::sort(maxes.begin(), maxes.end());
    std::vector<MCEstimate> result;
    result.reserve(b_grid.size());
    for (double b : b_grid) {
        const auto le = std::upper_bound(maxes.begin(), maxes.end(), b) - maxes.begin();
        const double p = static_cast<double>(le) / static_cast<double>(samples);
        MCEstimate est;
        est.estimate = p;
        est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
        est.samples = samples;
        est.seed = seed;
        result.push_back(est);
    }
    return result;
}

//! Sample mean of max(Theta)^t with its sample standard error.
inline MCEstimate mc_moment(int n, double u, int t, std::int64_t samples, Seed seed) {
    if (n < 1)
        throw std::domain_error("mc_moment: n must be >= 1");
    if (!(u > 0.0))
        throw std::domain_error("mc_moment: u must be positive");
    if (t < 1)
        throw std::domain_error("mc_moment: t must be >= 1");
    detail::require_samples(samples);
    const std::int64_t chunks = detail::chunk_count(samples);
    std::vector<double> sums(static_cast<std::size_t>(chunks), 0.0);
    std::vector<double> sq_sums(static_cast<std::size_t>(chunks), 0.0);
    detail::run_chunks(samples, seed, 1,
                       [&](std::int64_t c, std::int64_t count, RandomStream& stream) {
                           std::vector<double> point(static_cast<std::size_t>(n));
                           std::vector<double> pts(static_cast<std::size_t>(n - 1));
                           double s = 0.0, s2 = 0.0;
                           for (std::int64_t i = 0; i < count; ++i) {
                               detail::sample_spacings_into(point, u, pts, stream);
                               const double m = *std::max_element(point.begin(), point.end());
                               const double x = ipow(m, static_cast<unsigned>(t));
                               s += x;
                               s2 += x * x;
                           }
                           sums[static_cast<std::size_t>(c)] = s;
                           sq_sums[static_cast<std::size_t>(c)] = s2;
                       });
    double sum = 0.0, sq = 0.0;
    for (std::int64_t c = 0; c < chunks; ++c) {
        sum += sums[static_cast<std::size_t>(c)];
        sq += sq_sums[static_cast<std::size_t>(c)];
    }
    const double nn = static_cast<double>(samples);
    const double mean = sum / nn;
    MCEstimate est;
    est.estimate = mean;
    est.samples = samples;
    est.seed = seed;
    if (samples > 1) {
        const double var = std::max(0.0, (sq - nn * mean * mean) / (nn - 1.0));
        est.std_error = std::sqrt(var / nn);
    }
    return est;
}

} // namespace simplexorder
