#pragma once

#include <cstdint>

namespace sdfea {

// SplitMix64 finalizer. Stateless mix of a 64-bit value; used for seeding
// and for deriving per-run streams from (master seed, stream index).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic random source (xoshiro256++). Same seed gives the same
// sequence on every platform: all derived samplers below avoid
// implementation-defined library distributions. One instance per run,
// never shared between threads.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) noexcept;

    // Seed of the stream derived from (master, index). Streams are
    // statistically independent and reproducible regardless of how runs
    // are scheduled onto threads.
    static std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) noexcept {
        return mix64(mix64(master) ^ (index + 0x9E3779B97F4A7C15ULL));
    }
    static RandomSource stream(std::uint64_t master, std::uint64_t index) noexcept {
        return RandomSource(stream_seed(master, index));
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) noexcept { return next_double() < p; }

    // Uniform integer in [0, bound), bound >= 1. Lemire's multiply-shift
    // with rejection; exact and branch-light.
    std::uint64_t below(std::uint64_t bound) noexcept;

    // Binomial(n, p) by CDF inversion; O(np) expected steps.
    int binomial(int n, double p) noexcept;

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace sdfea
