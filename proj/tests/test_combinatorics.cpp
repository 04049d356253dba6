#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sdfea/combinatorics.hpp"

using namespace sdfea;

namespace {

// Independent route: ln C(n,k) = sum_{i=1..k} ln((n-k+i)/i).
long double log_binomial_oracle(int n, int k) {
    if (k > n - k) k = n - k;
    long double acc = 0.0L;
    for (int i = 1; i <= k; ++i)
        acc += std::log(static_cast<long double>(n - k + i) / static_cast<long double>(i));
    return acc;
}

}  // namespace

TEST_CASE("binomial_exact on known values") {
    CHECK(binomial_exact(0, 0) == 1);
    CHECK(binomial_exact(10, 0) == 1);
    CHECK(binomial_exact(5, 2) == 10);
    CHECK(binomial_exact(52, 5) == 2598960);
    CHECK(binomial_exact(60, 30) == 118264581564861424ULL);
    CHECK_FALSE(binomial_exact(100, 50).has_value());
    CHECK_THROWS_AS(binomial_exact(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(binomial_exact(-1, 0), std::invalid_argument);
}

TEST_CASE("log_binomial matches the log-ratio oracle") {
    CHECK(log_binomial(17, 0) == 0.0);
    CHECK(log_binomial(5, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-14));
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{
             {100, 50}, {100, 3}, {500, 250}, {1000, 17}, {10000, 5000}, {10000, 9999}}) {
        const long double oracle = log_binomial_oracle(n, k);
        const double rel = std::fabs(static_cast<double>(
            (static_cast<long double>(log_binomial(n, k)) - oracle) / oracle));
        CHECK(rel <= 1e-10);
    }
}

TEST_CASE("log_binomial is continuous across the exact/lgamma boundary") {
    // C(66,33) still fits 64 bits, C(68,34) does not.
    CHECK(binomial_exact(66, 33).has_value());
    CHECK_FALSE(binomial_exact(68, 34).has_value());
    for (const int n : {66, 67, 68, 69}) {
        const long double oracle = log_binomial_oracle(n, n / 2);
        CHECK(std::fabs(static_cast<double>(log_binomial_ld(n, n / 2) - oracle)) <=
              1e-10 * static_cast<double>(oracle));
    }
}

TEST_CASE("partial binomial sums obey the exact inequality (n <= 40)") {
    using u128 = unsigned __int128;
    for (int n = 1; n <= 40; ++n) {
        std::vector<u128> row(static_cast<std::size_t>(n) + 1);
        row[0] = 1;
        for (int i = 1; i <= n; ++i)
            row[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)] *
                                               static_cast<unsigned>(n - i + 1) /
                                               static_cast<unsigned>(i);
        u128 prefix = 0;
        for (int m = 1; m <= n / 2; ++m) {
            prefix += row[static_cast<std::size_t>(m)];
            CHECK(prefix * static_cast<unsigned>(n - 2 * m + 1) <=
                  row[static_cast<std::size_t>(m)] * static_cast<unsigned>(n - m + 1));
        }
    }
}
