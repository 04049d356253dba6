#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sdfea/combinatorics.hpp"
#include "sdfea/strength.hpp"
#include "sdfea/verification.hpp"

using namespace sdfea;

TEST_CASE("max_strength floors n/2.1 and never drops below 1") {
    CHECK(max_strength(100) == 47);
    CHECK(max_strength(50) == 23);
    CHECK(max_strength(40) == 19);
    CHECK(max_strength(3) == 1);
    CHECK(max_strength(1) == 1);
}

TEST_CASE("gamma=0 disables deviations") {
    const StrengthDist d(3, 20, 0.0, 1.5);
    RandomSource rng(1);
    for (int i = 0; i < 3000; ++i) CHECK(d.sample(rng) == 3);
}

TEST_CASE("closed form at r=1 puts gamma/2 on zero") {
    const auto p = strength_distribution(1, 10, 0.25, 1.5);
    CHECK(p[0] == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(0.75).epsilon(1e-14));
    long double tail = 0.0L;
    for (std::size_t i = 2; i < p.size(); ++i) tail += p[i];
    CHECK(static_cast<double>(tail) == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("closed form spot values at r=3, n=10") {
    const auto p = strength_distribution(3, 10, 0.25, 1.5);
    const double c = 1.0 / (1.0 + std::pow(2.0, -1.5));  // 0.73879612...
    CHECK(p[3] == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(p[2] == doctest::Approx(0.125 * c).epsilon(1e-12));          // ~0.0923495
    CHECK(p[1] == doctest::Approx(0.125 * c * std::pow(2.0, -1.5)).epsilon(1e-12));
}

TEST_CASE("closed form normalizes and carries gamma/2 below r") {
    const int n = 50;
    for (int r = 1; r <= max_strength(n); ++r) {
        const auto p = strength_distribution(r, n, 0.25, 1.5);
        long double total = 0.0L, below = 0.0L;
        for (std::size_t i = 0; i < p.size(); ++i) {
            total += p[i];
            if (static_cast<int>(i) < r) below += p[i];
        }
        CHECK(std::fabs(static_cast<double>(total - 1.0L)) <= 1e-12);
        if (r >= 2) CHECK(std::fabs(static_cast<double>(below) - 0.125) <= 1e-12);
    }
}

TEST_CASE("sampler matches the closed form (chi-square)") {
    const int n = 50, r = 3;
    const auto expected = strength_distribution(r, n, 0.25, 1.5);
    const StrengthDist d(r, n, 0.25, 1.5);
    auto attempt = [&](std::uint64_t seed) {
        RandomSource rng(seed);
        const std::uint64_t draws = 200000;
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t i = 0; i < draws; ++i)
            counts[static_cast<std::size_t>(d.sample(rng))]++;
        return chi_square_gof(counts, expected, draws).p_value > 1e-3;
    };
    CHECK((attempt(2024) || attempt(2025)));
}

TEST_CASE("strength arguments are validated") {
    CHECK_THROWS_AS(strength_distribution(0, 10, 0.25, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(strength_distribution(5, 10, 0.25, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(strength_distribution(1, 10, 1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(strength_distribution(1, 10, 0.25, 1.0), std::invalid_argument);
}

TEST_CASE("phase_length on hand-checked values") {
    CHECK(static_cast<double>(phase_length(100, 1, 0.25, 25.0)) ==
          doctest::Approx((1.0 / 0.75) * 100.0 * std::log(25.0)).epsilon(1e-12));
    // gamma=0, R=e gives exactly C(n,r)
    CHECK(static_cast<double>(phase_length(10, 3, 0.0, std::exp(1.0))) ==
          doctest::Approx(120.0).epsilon(1e-12));
}

TEST_CASE("phase_length stays finite and accurate at n=100, r=50") {
    const long double got = phase_length(100, 50, 0.25, 25.0);
    CHECK(std::isfinite(static_cast<double>(got)));
    // big-value oracle: ln C(100,50) as a sum of logs
    long double lnc = 0.0L;
    for (int i = 1; i <= 50; ++i)
        lnc += std::log(static_cast<long double>(50 + i) / static_cast<long double>(i));
    const long double oracle = std::exp(lnc) * std::log(25.0L) / 0.75L;
    CHECK(std::fabs(static_cast<double>(got / oracle - 1.0L)) <= 1e-9);
    CHECK(static_cast<double>(got) == doctest::Approx(4.33e29).epsilon(0.01));
}

TEST_CASE("phase_length grows strictly in r below n/2") {
    for (int r = 1; r < 49; ++r)
        CHECK(phase_length(100, r, 0.25, 25.0) < phase_length(100, r + 1, 0.25, 25.0));
}

TEST_CASE("phase_length rejects bad arguments") {
    CHECK_THROWS_AS(phase_length(100, 0, 0.25, 25.0), std::invalid_argument);
    CHECK_THROWS_AS(phase_length(100, 101, 0.25, 25.0), std::invalid_argument);
    CHECK_THROWS_AS(phase_length(100, 1, 0.25, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(phase_length(100, 1, 0.25, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(phase_length(100, 1, 1.0, 25.0), std::invalid_argument);
}

TEST_CASE("size-1 search space degenerates the upward branch") {
    const StrengthDist d(1, 1, 0.5, 1.5);
    RandomSource rng(4);
    for (int i = 0; i < 1000; ++i) {
        const int s = d.sample(rng);
        CHECK((s == 0 || s == 1));
    }
    const auto p = strength_distribution(1, 1, 0.5, 1.5);
    CHECK(p[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(0.75).epsilon(1e-14));
}
