#pragma once

#include <vector>

#include "sdfea/rng.hpp"

namespace sdfea {

// Discrete power law on [1..u]: Pr[X = i] = C * i^(-beta) with
// C = 1 / sum_{j=1..u} j^(-beta). Immutable after construction and safe
// to share across threads; sampling goes through a caller-owned
// RandomSource.
class PowerLawDist {
public:
    PowerLawDist(double beta, int u);

    double beta() const noexcept { return beta_; }
    int upper() const noexcept { return u_; }
    double normalization() const noexcept { return static_cast<double>(norm_); }

    double pmf(int i) const noexcept;

    // Inverse-CDF lookup on the precomputed table; O(log u).
    int sample(RandomSource& rng) const noexcept {
        const double v = rng.next_double();
        int lo = 0, hi = u_ - 1;
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            if (cdf_[static_cast<std::size_t>(mid)] <= v) lo = mid + 1; else hi = mid;
        }
        return lo + 1;
    }

private:
    double beta_;
    int u_;
    long double norm_;                 // C_{beta,u}, kept in extended precision
    std::vector<long double> weight_;  // weight_[i-1] = i^(-beta)
    std::vector<double> cdf_;          // cdf_[i-1] = Pr[X <= i]
};

}  // namespace sdfea
