#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "sdfea/fitness.hpp"

using namespace sdfea;

namespace {

BitString from_bits(const std::vector<int>& bits) {
    BitString x(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) x.set(static_cast<int>(i), true);
    return x;
}

BitString with_ones(int n, int ones) {
    BitString x(n);
    for (int i = 0; i < ones; ++i) x.set(i, true);
    return x;
}

}  // namespace

TEST_CASE("onemax counts ones") {
    OneMax f(4);
    CHECK(f.evaluate(from_bits({0, 0, 0, 0})) == 0);
    CHECK(f.evaluate(from_bits({1, 1, 1, 1})) == 4);
    CHECK(f.is_optimum(from_bits({1, 1, 1, 1})));
    CHECK(f.evaluate(from_bits({1, 0, 1, 0})) == 2);
    CHECK(f.optimum_value() == 4);
}

TEST_CASE("leadingones measures the ones prefix") {
    LeadingOnes f(4);
    CHECK(f.evaluate(from_bits({0, 1, 1, 1})) == 0);
    CHECK(f.evaluate(from_bits({1, 1, 1, 1})) == 4);
    CHECK(f.is_optimum(from_bits({1, 1, 1, 1})));
    CHECK(f.evaluate(from_bits({1, 1, 0, 1})) == 2);
}

TEST_CASE("jump matches the displayed definition at n=10, k=4, delta=2") {
    JumpKDelta f(10, 4, 2);
    CHECK(f.evaluate(with_ones(10, 6)) == 6);    // 6 in [0..6]
    CHECK(f.evaluate(with_ones(10, 7)) == -7);   // 7 in the valley
    CHECK(f.evaluate(with_ones(10, 8)) == 8);    // 8 in [8..10]
    CHECK(f.evaluate(with_ones(10, 10)) == 10);
    CHECK(f.is_optimum(with_ones(10, 10)));
    CHECK_FALSE(f.is_optimum(with_ones(10, 8)));
}

TEST_CASE("jump parameter ranges are enforced at construction") {
    CHECK_THROWS_AS(JumpKDelta(10, 4, 5), std::invalid_argument);   // delta > k
    CHECK_THROWS_AS(JumpKDelta(10, 11, 2), std::invalid_argument);  // k > n
    CHECK_THROWS_AS(JumpKDelta(10, 4, 0), std::invalid_argument);   // delta < 1
    CHECK(JumpKDelta(10, 4, 4).params() == "k=4;delta=4");
}

TEST_CASE("jump with k = delta equals the classic jump on all points (n=8)") {
    for (const int delta : {2, 3}) {
        const int n = 8;
        JumpKDelta f(n, delta, delta);
        for (int m = 0; m < (1 << n); ++m) {
            BitString x(n);
            for (int i = 0; i < n; ++i)
                if ((m >> i) & 1) x.set(i, true);
            const int ones = x.ones_count();
            const double classic =
                (ones <= n - delta || ones == n) ? double(ones) : double(-ones);
            CHECK(f.evaluate(x) == classic);
        }
    }
}

TEST_CASE("onemax and leadingones are unimodal (exhaustive, n=8)") {
    const int n = 8;
    OneMax om(n);
    LeadingOnes lo(n);
    for (const FitnessFunction* f :
         {static_cast<const FitnessFunction*>(&om), static_cast<const FitnessFunction*>(&lo)}) {
        for (int m = 0; m < (1 << n); ++m) {
            BitString x(n);
            for (int i = 0; i < n; ++i)
                if ((m >> i) & 1) x.set(i, true);
            if (f->is_optimum(x)) continue;
            const double fx = f->evaluate(x);
            bool has_better_neighbor = false;
            for (int i = 0; i < n && !has_better_neighbor; ++i) {
                BitString y = x;
                y.flip(i);
                has_better_neighbor = f->evaluate(y) > fx;
            }
            CHECK(has_better_neighbor);
        }
    }
}

TEST_CASE("is_optimum agrees with the optimum value (exhaustive, n=10)") {
    const int n = 10;
    OneMax om(n);
    LeadingOnes lo(n);
    JumpKDelta jp(n, 4, 2);
    for (const FitnessFunction* f :
         {static_cast<const FitnessFunction*>(&om), static_cast<const FitnessFunction*>(&lo),
          static_cast<const FitnessFunction*>(&jp)}) {
        for (int m = 0; m < (1 << n); ++m) {
            BitString x(n);
            for (int i = 0; i < n; ++i)
                if ((m >> i) & 1) x.set(i, true);
            CHECK(f->is_optimum(x) == (f->evaluate(x) == f->optimum_value()));
        }
    }
}

TEST_CASE("counted wrapper counts every evaluation") {
    OneMax f(16);
    CountedFitness counted(f);
    RandomSource rng(6);
    CHECK(counted.count() == 0);
    for (int i = 1; i <= 137; ++i) {
        counted.evaluate(BitString::random(16, rng));
        CHECK(counted.count() == static_cast<std::uint64_t>(i));
    }
}

TEST_CASE("fitness factory resolves names and validates parameters") {
    CHECK(make_fitness("onemax", 12, {})->name() == "onemax");
    CHECK(make_fitness("leadingones", 12, {})->name() == "leadingones");
    const auto jump = make_fitness("jump", 12, {{"k", 4}, {"delta", 2}});
    CHECK(jump->name() == "jump");
    CHECK(jump->params() == "k=4;delta=2");
    CHECK_THROWS_AS(make_fitness("rastrigin", 12, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_fitness("jump", 12, {{"k", 4}}), std::invalid_argument);
    CHECK_THROWS_AS(make_fitness("onemax", 12, {{"k", 4}}), std::invalid_argument);
}
