#pragma once

#include <cmath>
#include <cstdint>

// Deterministic counter-based random numbers for Monte Carlo runs.
//
// Algorithm: the SplitMix64 output function (Steele, Lea & Flood's mixer, as
// published with Vigna's splitmix64) evaluated in counter mode,
//   out(i) = mix64(key + (i+1) * 0x9E3779B97F4A7C15)
// with a per-stream key derived by the same mixer from (seed, stream). Each
// (seed, stream) pair is an independent, stateless sequence addressed by
// counter, so parallel partitions indexed by block number reproduce the exact
// bitstream regardless of thread count or evaluation order. Distribution code
// is hand-rolled (no std::<random> distributions) so output bytes are
// identical across platforms and standard libraries.

namespace vlisl::rng {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix64(seed + golden_gamma * mix64(stream + golden_gamma))) {}

    std::uint64_t next_u64() {
        return mix64(key_ + (++counter_) * golden_gamma);
    }

    // Uniform double in [0, 1): top 53 bits of the next word.
    double next_double() {
        return double(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; generated in pairs, second value cached.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        const double u2 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53; // log(0) guard
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.28318530717958647692 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // Uniform nibble 0..15 (one GF(16) symbol); consumes whole words lazily.
    std::uint8_t next_nibble() {
        if (nibbles_left_ == 0) {
            nibble_word_ = next_u64();
            nibbles_left_ = 16;
        }
        const std::uint8_t v = std::uint8_t(nibble_word_ & 0xF);
        nibble_word_ >>= 4;
        --nibbles_left_;
        return v;
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    std::uint64_t nibble_word_ = 0;
    int nibbles_left_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace vlisl::rng
