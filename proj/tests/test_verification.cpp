#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sdfea/fitness.hpp"
#include "sdfea/verification.hpp"

using namespace sdfea;

namespace {

BitString with_ones(int n, int ones) {
    BitString x(n);
    for (int i = 0; i < ones; ++i) x.set(i, true);
    return x;
}

BitString from_mask(int m, int n) {
    BitString x(n);
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) x.set(i, true);
    return x;
}

}  // namespace

TEST_CASE("individual gap on onemax is 1 everywhere below the optimum") {
    OneMax f(6);
    for (int m = 0; m < (1 << 6); ++m) {
        const BitString x = from_mask(m, 6);
        const auto gap = brute_ind_gap(f, x);
        if (f.is_optimum(x)) {
            CHECK_FALSE(gap.has_value());
        } else {
            REQUIRE(gap.has_value());
            CHECK(*gap == 1);
        }
    }
}

TEST_CASE("individual gap at jump local optima equals delta") {
    JumpKDelta classic(10, 3, 3);
    CHECK(brute_ind_gap(classic, with_ones(10, 7)) == 3);
    JumpKDelta offset(10, 4, 2);
    CHECK(brute_ind_gap(offset, with_ones(10, 6)) == 2);
}

TEST_CASE("level gap: unimodal levels give 1, jump local level gives delta") {
    LeadingOnes lo(8);
    CHECK(brute_level_gap(lo, with_ones(8, 3)) == 1);
    JumpKDelta classic(10, 3, 3);
    CHECK(brute_level_gap(classic, with_ones(10, 7)) == 3);
    // the optimal level is signaled as undefined
    CHECK_FALSE(brute_level_gap(classic, with_ones(10, 10)).has_value());
    CHECK_FALSE(brute_ind_gap(classic, with_ones(10, 10)).has_value());
}

TEST_CASE("gap report keeps 1 <= ind <= level <= n on non-optimal points") {
    JumpKDelta f(8, 3, 2);
    for (int m = 0; m < (1 << 8); ++m) {
        const BitString x = from_mask(m, 8);
        const auto report = gap_report(f, x);
        if (!report) continue;
        CHECK(report->ind_gap >= 1);
        CHECK(report->ind_gap <= report->level_gap);
        CHECK(report->level_gap <= 8);
    }
}

TEST_CASE("local optimum predicate matches the gap definition") {
    JumpKDelta f(30, 4, 4);
    CHECK(is_local_optimum(f, with_ones(30, 26)));
    CHECK_FALSE(is_local_optimum(f, with_ones(30, 12)));
    OneMax om(30);
    CHECK_FALSE(is_local_optimum(om, with_ones(30, 29)));
}

TEST_CASE("chi-square statistic is zero for exactly expected counts") {
    const std::vector<std::uint64_t> observed = {600, 400};
    const std::vector<double> expected = {0.6, 0.4};
    const auto res = chi_square_gof(observed, expected, 1000);
    CHECK(res.statistic == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(res.p_value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(res.dof == 1);
}

TEST_CASE("chi-square tail matches tabulated quantiles") {
    // Q(df/2, x/2) against standard table values.
    CHECK(gamma_q(0.5, 3.841458820694124 / 2) == doctest::Approx(0.05).epsilon(1e-6));
    CHECK(gamma_q(2.5, 11.070497693516351 / 2) == doctest::Approx(0.05).epsilon(1e-6));
    CHECK(gamma_q(5.0, 29.588298445074422 / 2) == doctest::Approx(0.001).epsilon(1e-4));
    CHECK(gamma_q(1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
    CHECK(gamma_q(0.5, 0.0) == 1.0);
}

TEST_CASE("chi-square flags a shifted distribution") {
    // expected uniform over 10 bins, observed drawn from a tilted one
    std::vector<double> expected(10, 0.1);
    std::vector<std::uint64_t> observed(10);
    std::uint64_t total = 0;
    for (int i = 0; i < 10; ++i) {
        observed[static_cast<std::size_t>(i)] = 8000 + static_cast<std::uint64_t>(400 * i);
        total += observed[static_cast<std::size_t>(i)];
    }
    const auto res = chi_square_gof(observed, expected, total);
    CHECK(res.p_value < 1e-6);
}

TEST_CASE("chi-square keeps its size under the null") {
    PowerLawDist d(1.5, 12);
    std::vector<double> expected(13, 0.0);
    for (int i = 1; i <= 12; ++i) expected[static_cast<std::size_t>(i)] = d.pmf(i);
    auto attempt = [&](std::uint64_t seed) {
        int ok = 0;
        const int trials = 100;
        for (int t = 0; t < trials; ++t) {
            RandomSource rng(RandomSource::stream_seed(seed, t));
            std::vector<std::uint64_t> counts(13, 0);
            const std::uint64_t draws = 100000;
            for (std::uint64_t i = 0; i < draws; ++i)
                counts[static_cast<std::size_t>(d.sample(rng))]++;
            if (chi_square_gof(counts, expected, draws).p_value > 1e-3) ++ok;
        }
        return ok >= 99;
    };
    CHECK((attempt(614) || attempt(615)));
}

TEST_CASE("chi-square pools rare bins and rejects degenerate input") {
    // A long tail of tiny expectations must collapse into fewer bins.
    std::vector<double> expected = {0.5, 0.4, 0.02, 0.02, 0.02, 0.02, 0.02};
    std::vector<std::uint64_t> observed = {50, 40, 2, 2, 2, 2, 2};
    const auto res = chi_square_gof(observed, expected, 100);
    CHECK(res.pooled_bins < 7);
    CHECK(res.dof == res.pooled_bins - 1);

    CHECK_THROWS_AS(chi_square_gof({10}, {1.0}, 10), std::invalid_argument);
    CHECK_THROWS_AS(chi_square_gof({10, 10}, {0.5, 0.4}, 20), std::invalid_argument);
    CHECK_THROWS_AS(chi_square_gof({10, 10}, {0.5, 0.5}, 21), std::invalid_argument);
}

TEST_CASE("escape trials require a genuine local optimum") {
    JumpKDelta f(30, 2, 2);
    CHECK_THROWS_AS(
        escape_time_trial(f, SdFeaParams{1.5, 0.25, 25.0}, with_ones(30, 15), 10, 1000, 1),
        std::invalid_argument);
}

TEST_CASE("escape time from the jump local optimum sits near C(n,delta)/(1-gamma)") {
    const int n = 30, delta = 2;
    JumpKDelta f(n, delta, delta);
    const auto trial = escape_time_trial(f, SdFeaParams{1.5, 0.25, 25.0},
                                         with_ones(n, n - delta), 300, 1'000'000, 77);
    CHECK(trial.censored == 0);
    const double target = 435.0 / 0.75;  // C(30,2)/(1-gamma)
    CHECK(trial.mean_iterations >= target / 2.0);
    CHECK(trial.mean_iterations <= target * 2.0);
}

TEST_CASE("with gamma=0 escapes happen only at the gap strength") {
    const int n = 24, delta = 2;
    JumpKDelta f(n, delta, delta);
    const auto trial = escape_time_trial(f, SdFeaParams{1.5, 0.0, 25.0},
                                         with_ones(n, n - delta), 200, 30'000, 33);
    for (int r = 0; r < delta; ++r)
        CHECK(trial.escape_phase_histogram[static_cast<std::size_t>(r)] == 0);
    std::uint64_t escapes = 0;
    for (const auto c : trial.escape_phase_histogram) escapes += c;
    CHECK(escapes + static_cast<std::uint64_t>(trial.censored) == 200);
    CHECK(escapes > 150);  // most runs leave within the strength-2 phase
}

TEST_CASE("more improving targets never slow the escape") {
    const int n = 30;
    JumpKDelta narrow(n, 4, 4);
    JumpKDelta wide(n, 6, 4);
    const SdFeaParams params{1.5, 0.25, 25.0};
    const auto t_narrow =
        escape_time_trial(narrow, params, with_ones(n, n - 4), 300, 10'000'000, 555);
    const auto t_wide =
        escape_time_trial(wide, params, with_ones(n, n - 6), 300, 10'000'000, 556);
    CHECK(t_wide.mean_iterations <= t_narrow.mean_iterations);
}
