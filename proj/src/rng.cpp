#include "sdfea/rng.hpp"

#include <cmath>

namespace sdfea {

RandomSource::RandomSource(std::uint64_t seed) noexcept {
    std::uint64_t st = seed;
    for (auto& w : s_) {
        w = mix64(st);
        st += 0x9E3779B97F4A7C15ULL;
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t RandomSource::below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        const std::uint64_t threshold = -bound % bound;
        while (lo < threshold) {
            m = static_cast<unsigned __int128>(next_u64()) * bound;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

int RandomSource::binomial(int n, double p) noexcept {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    if (p > 0.5) return n - binomial(n, 1.0 - p);

    const double q = 1.0 - p;
    const double ratio = p / q;
    double pmf = std::pow(q, n);
    double cdf = pmf;
    const double u = next_double();
    int k = 0;
    while (u >= cdf && k < n) {
        ++k;
        pmf *= ratio * static_cast<double>(n - k + 1) / static_cast<double>(k);
        cdf += pmf;
    }
    return k;
}

}  // namespace sdfea
