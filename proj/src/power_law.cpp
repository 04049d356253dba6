#include "sdfea/power_law.hpp"

#include <cmath>
#include <stdexcept>

namespace sdfea {

PowerLawDist::PowerLawDist(double beta, int u) : beta_(beta), u_(u) {
    if (!(beta > 1.0)) throw std::invalid_argument("PowerLawDist: beta must be > 1");
    if (u < 1) throw std::invalid_argument("PowerLawDist: u must be >= 1");

    // Ascending summation of i^(-beta) in extended precision, then one
    // normalization pass. The 1e-12 tolerance is an invariant of the
    // finished table, checked here rather than trusted.
    weight_.resize(static_cast<std::size_t>(u));
    long double total = 0.0L;
    for (int i = 1; i <= u; ++i) {
        const long double w =
            std::exp(-static_cast<long double>(beta) * std::log(static_cast<long double>(i)));
        weight_[static_cast<std::size_t>(i - 1)] = w;
        total += w;
    }
    norm_ = 1.0L / total;

    cdf_.resize(static_cast<std::size_t>(u));
    long double acc = 0.0L;
    for (int i = 0; i < u; ++i) {
        acc += weight_[static_cast<std::size_t>(i)];
        cdf_[static_cast<std::size_t>(i)] = static_cast<double>(acc / total);
    }

    long double mass = 0.0L;
    for (int i = 1; i <= u; ++i) mass += pmf(i);
    if (std::fabs(static_cast<double>(mass - 1.0L)) > 1e-12)
        throw std::logic_error("PowerLawDist: normalization drift above 1e-12");
}

double PowerLawDist::pmf(int i) const noexcept {
    if (i < 1 || i > u_) return 0.0;
    return static_cast<double>(norm_ * weight_[static_cast<std::size_t>(i - 1)]);
}

}  // namespace sdfea
