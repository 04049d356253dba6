#include "sdfea/strength.hpp"

#include <cmath>
#include <stdexcept>

#include "sdfea/combinatorics.hpp"

namespace sdfea {

int max_strength(int n) noexcept {
    const int m = static_cast<int>(std::floor(static_cast<double>(n) / 2.1));
    return m < 1 ? 1 : m;
}

namespace {

double check_strength_args(int r, int n, double gamma, double beta) {
    if (n < 1) throw std::invalid_argument("strength: n must be >= 1");
    if (r < 1 || r > max_strength(n))
        throw std::invalid_argument("strength: r out of [1, floor(n/2.1)]");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("strength: gamma must be in [0, 1)");
    if (!(beta > 1.0)) throw std::invalid_argument("strength: beta must be > 1");
    return beta;
}

}  // namespace

StrengthDist::StrengthDist(int r, int n, double gamma, double beta)
    : r_(r), n_(n), gamma_(gamma), beta_(beta),
      down_(check_strength_args(r, n, gamma, beta), r > 1 ? r - 1 : 1) {
    if (n - r >= 1) up_ = std::make_unique<PowerLawDist>(beta, n - r);
}

std::vector<double> strength_distribution(int r, int n, double gamma, double beta) {
    check_strength_args(r, n, gamma, beta);
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
    p[static_cast<std::size_t>(r)] = 1.0 - gamma;

    if (r == 1) {
        // pow(beta, max(1, r-1)) = pow(beta, 1) returns 1 only, so the
        // downward branch lands on s = 0.
        p[0] = gamma / 2.0;
    } else {
        const PowerLawDist down(beta, r - 1);
        for (int a = 1; a < r; ++a)
            p[static_cast<std::size_t>(a)] = gamma / 2.0 * down.pmf(r - a);
    }

    if (n - r >= 1) {
        const PowerLawDist up(beta, n - r);
        for (int a = r + 1; a <= n; ++a)
            p[static_cast<std::size_t>(a)] = gamma / 2.0 * up.pmf(a - r);
    } else {
        p[static_cast<std::size_t>(r)] += gamma / 2.0;
    }
    return p;
}

long double phase_length(int n, int r, double gamma, double R) {
    if (r < 1 || r > n) throw std::invalid_argument("phase_length: r out of [1, n]");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("phase_length: gamma must be in [0, 1)");
    if (!(R > 1.0))
        throw std::invalid_argument("phase_length: R must be > 1");
    return std::exp(log_binomial_ld(n, r)) * std::log(static_cast<long double>(R)) /
           (1.0L - static_cast<long double>(gamma));
}

}  // namespace sdfea
