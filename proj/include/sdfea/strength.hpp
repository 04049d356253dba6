#pragma once

#include <memory>
#include <vector>

#include "sdfea/power_law.hpp"
#include "sdfea/rng.hpp"

namespace sdfea {

// Largest strength the stagnation mechanism may reach: floor(n / 2.1),
// at least 1 so degenerate sizes still run.
int max_strength(int n) noexcept;

// The strength-sampling branch shared by the distribution object and the
// optimizer's cached fast path: r with probability 1 - gamma, otherwise
// a power-law deviation upward or downward (gamma/2 each). `up` may be
// null when n - r < 1 (size-1 inputs), degenerating that branch to r.
inline int sample_strength_from(int r, double gamma, const PowerLawDist& down,
                                const PowerLawDist* up, RandomSource& rng) noexcept {
    const double v = rng.next_double();
    if (v < 1.0 - gamma) return r;
    if (v < 1.0 - gamma / 2.0) return up ? r + up->sample(rng) : r;
    return r - down.sample(rng);  // r = 1 gives s = 0
}

// Number of bits to flip while the current strength is r: r itself with
// probability 1 - gamma, otherwise a power-law deviation below or above
// r (gamma/2 each). For r = 1 the downward branch always yields s = 0.
class StrengthDist {
public:
    StrengthDist(int r, int n, double gamma, double beta);

    int r() const noexcept { return r_; }
    int n() const noexcept { return n_; }

    int sample(RandomSource& rng) const noexcept {
        return sample_strength_from(r_, gamma_, down_, up_.get(), rng);
    }

private:
    int r_, n_;
    double gamma_, beta_;
    PowerLawDist down_;                  // range [1 .. max(1, r-1)]
    std::unique_ptr<PowerLawDist> up_;   // range [1 .. n-r], absent if n == r
};

// Closed-form marginal of the strength sample as a vector over [0..n];
// the oracle the sampler is tested against.
std::vector<double> strength_distribution(int r, int n, double gamma, double beta);

// Maximum length of phase r: C(n, r) * ln(R) / (1 - gamma), in extended
// precision so the stagnation counter can be compared against it even
// when the value is astronomically large.
long double phase_length(int n, int r, double gamma, double R);

}  // namespace sdfea
