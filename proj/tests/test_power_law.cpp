#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sdfea/power_law.hpp"
#include "sdfea/verification.hpp"

using namespace sdfea;

TEST_CASE("degenerate support always samples 1") {
    PowerLawDist d(1.5, 1);
    RandomSource rng(3);
    for (int i = 0; i < 500; ++i) CHECK(d.sample(rng) == 1);
    CHECK(d.pmf(1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("beta=2, u=2 has pmf (0.8, 0.2)") {
    PowerLawDist d(2.0, 2);
    CHECK(d.pmf(1) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(d.pmf(2) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(d.pmf(0) == 0.0);
    CHECK(d.pmf(3) == 0.0);

    RandomSource rng(9);
    const int draws = 100000;
    int ones = 0;
    for (int i = 0; i < draws; ++i)
        if (d.sample(rng) == 1) ++ones;
    const double sigma = std::sqrt(draws * 0.8 * 0.2);
    CHECK(std::fabs(ones - 0.8 * draws) <= 3.0 * sigma);
}

TEST_CASE("beta=1.5, u=3 empirical frequencies match the closed form") {
    // C = 1/(1 + 2^-1.5 + 3^-1.5), evaluated independently
    const double c = 1.0 / (1.0 + std::pow(2.0, -1.5) + std::pow(3.0, -1.5));
    PowerLawDist d(1.5, 3);
    CHECK(d.normalization() == doctest::Approx(c).epsilon(1e-12));

    auto attempt = [&](std::uint64_t seed) {
        RandomSource rng(seed);
        const std::uint64_t draws = 200000;
        std::vector<std::uint64_t> counts(4, 0);
        for (std::uint64_t i = 0; i < draws; ++i)
            counts[static_cast<std::size_t>(d.sample(rng))]++;
        const std::vector<double> expected = {0.0, c, c * std::pow(2.0, -1.5),
                                              c * std::pow(3.0, -1.5)};
        return chi_square_gof(counts, expected, draws).p_value > 1e-3;
    };
    CHECK((attempt(101) || attempt(102)));
}

TEST_CASE("normalization and monotonicity across the parameter grid") {
    for (const double beta : {1.25, 1.5, 2.0}) {
        std::vector<int> us;
        for (int u = 1; u <= 128; ++u) us.push_back(u);
        us.insert(us.end(), {1000, 10000});
        for (const int u : us) {
            PowerLawDist d(beta, u);
            long double mass = 0.0L;
            for (int i = 1; i <= u; ++i) mass += d.pmf(i);
            CHECK(std::fabs(static_cast<double>(mass - 1.0L)) <= 1e-12);
            for (int i = 1; i < u; ++i) CHECK(d.pmf(i) > d.pmf(i + 1));
        }
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(PowerLawDist(1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(PowerLawDist(0.5, 5), std::invalid_argument);
    CHECK_THROWS_AS(PowerLawDist(1.5, 0), std::invalid_argument);
}

TEST_CASE("sampling is deterministic per seed") {
    PowerLawDist d(1.5, 40);
    RandomSource a(55), b(55);
    for (int i = 0; i < 200; ++i) CHECK(d.sample(a) == d.sample(b));
}
