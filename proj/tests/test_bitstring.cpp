#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "sdfea/bitstring.hpp"

using namespace sdfea;

namespace {

BitString from_bits(const std::vector<int>& bits) {
    BitString x(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) x.set(static_cast<int>(i), true);
    return x;
}

}  // namespace

TEST_CASE("hamming distance on hand-checked pairs") {
    CHECK(hamming_distance(from_bits({0, 0, 0, 0}), from_bits({0, 0, 0, 0})) == 0);
    CHECK(hamming_distance(from_bits({0, 0, 0, 0}), from_bits({1, 1, 1, 1})) == 4);
    CHECK(hamming_distance(from_bits({1, 0, 1, 0}), from_bits({1, 0, 0, 1})) == 2);
}

TEST_CASE("hamming distance rejects length mismatch") {
    CHECK_THROWS_AS(hamming_distance(BitString(4), BitString(5)), std::invalid_argument);
}

TEST_CASE("hamming distance is a metric (exhaustive, n=6)") {
    const int n = 6;
    std::vector<BitString> pts;
    for (int m = 0; m < (1 << n); ++m) {
        BitString x(n);
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1) x.set(i, true);
        pts.push_back(x);
    }
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = 0; b < pts.size(); ++b) {
            const int dab = hamming_distance(pts[a], pts[b]);
            CHECK((dab == 0) == (a == b));
            CHECK(dab == hamming_distance(pts[b], pts[a]));
            for (std::size_t c = 0; c < pts.size(); ++c)
                CHECK(dab <= hamming_distance(pts[a], pts[c]) +
                                 hamming_distance(pts[c], pts[b]));
        }
    }
}

TEST_CASE("flip_random_bits endpoints") {
    RandomSource rng(5);
    const BitString x = BitString::random(70, rng);
    CHECK(flip_random_bits(x, 0, rng) == x);
    CHECK(flip_random_bits(x, 70, rng) == x.complement());
    CHECK_THROWS_AS(flip_random_bits(x, 71, rng), std::invalid_argument);
    CHECK_THROWS_AS(flip_random_bits(x, -1, rng), std::invalid_argument);
    for (int s = 1; s < 70; s += 13)
        CHECK(hamming_distance(x, flip_random_bits(x, s, rng)) == s);
}

TEST_CASE("flip_random_bits picks subsets uniformly (n=4, s=2)") {
    RandomSource rng(23);
    const BitString zero(4);
    std::map<std::pair<int, int>, int> counts;
    const int draws = 60000;
    for (int d = 0; d < draws; ++d) {
        const BitString y = flip_random_bits(zero, 2, rng);
        std::vector<int> pos;
        for (int i = 0; i < 4; ++i)
            if (y.test(i)) pos.push_back(i);
        REQUIRE(pos.size() == 2);
        counts[{pos[0], pos[1]}]++;
    }
    // oracle: the six 2-subsets of {0,1,2,3}, enumerated
    REQUIRE(counts.size() == 6);
    const double expected = draws / 6.0;
    const double sigma = std::sqrt(draws * (1.0 / 6.0) * (5.0 / 6.0));
    for (const auto& [pair, c] : counts) CHECK(std::fabs(c - expected) <= 3.0 * sigma);
}

TEST_CASE("flip_random_bits is unbiased under complement (shared seed)") {
    for (const int s : {1, 3, 7}) {
        RandomSource rng_a(777), rng_b(777);
        const BitString x = BitString::random(31, rng_a);
        const BitString x2 = BitString::random(31, rng_b);  // same draw, same point
        const BitString y = flip_random_bits(x, s, rng_a);
        const BitString yc = flip_random_bits(x2.complement(), s, rng_b);
        CHECK(yc == y.complement());
    }
}

TEST_CASE("standard_bit_mutation endpoints and mean flip count") {
    RandomSource rng(31);
    const BitString x = BitString::random(100, rng);
    CHECK(standard_bit_mutation(x, 0.0, rng) == x);
    CHECK(standard_bit_mutation(x, 1.0, rng) == x.complement());
    CHECK_THROWS_AS(standard_bit_mutation(x, 1.5, rng), std::invalid_argument);
    CHECK_THROWS_AS(standard_bit_mutation(x, -0.1, rng), std::invalid_argument);

    const int draws = 100000;
    const double p = 0.01;
    long long total = 0;
    for (int d = 0; d < draws; ++d)
        total += hamming_distance(x, standard_bit_mutation(x, p, rng));
    const double mean = static_cast<double>(total) / draws;
    const double sigma_mean = std::sqrt(100 * p * (1 - p) / draws);
    CHECK(std::fabs(mean - 1.0) <= 3.0 * sigma_mean);
}

TEST_CASE("subset sampler returns distinct in-range positions") {
    SubsetSampler sampler(37);
    RandomSource rng(41);
    std::vector<int> pos;
    for (int trial = 0; trial < 500; ++trial) {
        const int s = static_cast<int>(rng.below(38));
        sampler.sample(s, rng, pos);
        REQUIRE(static_cast<int>(pos.size()) == s);
        std::set<int> uniq(pos.begin(), pos.end());
        CHECK(static_cast<int>(uniq.size()) == s);
        for (const int p : pos) {
            CHECK(p >= 0);
            CHECK(p < 37);
        }
    }
}

TEST_CASE("ones_count and leading_ones") {
    BitString x(130);
    CHECK(x.ones_count() == 0);
    CHECK(x.leading_ones() == 0);
    x = BitString::all_ones(130);
    CHECK(x.ones_count() == 130);
    CHECK(x.leading_ones() == 130);
    x.set(70, false);
    CHECK(x.ones_count() == 129);
    CHECK(x.leading_ones() == 70);
}
