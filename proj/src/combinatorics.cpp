#include "sdfea/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace sdfea {

namespace {

void check_args(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("binomial: need 0 <= k <= n");
}

}  // namespace

std::optional<std::uint64_t> binomial_exact(int n, int k) {
    check_args(n, k);
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    constexpr unsigned __int128 limit = ~std::uint64_t{0};
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is the exact partial coefficient C(n-k+i, i),
        // so the division never truncates and partials grow monotonically.
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > limit) return std::nullopt;
    }
    return static_cast<std::uint64_t>(r);
}

long double log_binomial_ld(int n, int k) {
    check_args(n, k);
    if (const auto exact = binomial_exact(n, k))
        return std::log(static_cast<long double>(*exact));
    return std::lgamma(static_cast<long double>(n) + 1.0L) -
           std::lgamma(static_cast<long double>(k) + 1.0L) -
           std::lgamma(static_cast<long double>(n - k) + 1.0L);
}

double log_binomial(int n, int k) {
    return static_cast<double>(log_binomial_ld(n, k));
}

}  // namespace sdfea
