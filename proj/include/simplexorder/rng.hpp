#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace simplexorder {

//! 64-bit seed for any deterministic sampling routine.
struct Seed {
    std::uint64_t value = 0;
};

//! Identifier of the generator scheme, echoed in Monte Carlo provenance.
inline constexpr std::string_view kGeneratorId = "mt19937_64+splitmix64-streams";

namespace detail {

// splitmix64 finalizer (Stafford mix13); bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace detail

//! Derive the seed of logical stream `index` from a master seed.
//! Equals the (index+1)-th output of a splitmix64 sequence started at the
//! master seed, so distinct indices give independent-quality streams.
inline std::uint64_t derive_stream(Seed master, std::uint64_t index) {
    return detail::mix64(master.value + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

//! Deterministic stream of doubles in [0,1).
//! mt19937_64 is fully specified by the standard, and the 53-bit mantissa
//! construction avoids std::uniform_real_distribution (whose output is
//! implementation-defined), so streams are bit-identical everywhere.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
    explicit RandomStream(Seed seed) : engine_(seed.value) {}

    //! Next variate, uniform on [0,1); the value 1.0 never occurs.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace simplexorder
