#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdfea/bitstring.hpp"
#include "sdfea/fitness.hpp"
#include "sdfea/rng.hpp"
#include "sdfea/strength.hpp"

namespace sdfea {

struct SdFeaParams {
    double beta = 1.5;
    double gamma = 0.25;
    double R = 25.0;
    void validate() const;
};

// Mutable per-run state of the SD-FEA: current point, strength and the
// unsuccessful-step counter. The strength never exceeds floor(n/2.1);
// the counter is reset exactly when it reaches the phase length or on a
// strict improvement.
struct SdFeaState {
    BitString x;
    double fx = 0.0;
    int r = 1;
    std::uint64_t u = 0;
};

// Stagnation detection with heavy-tailed deviations. One step:
//   s = r with prob 1-gamma, r + pow(beta, n-r) or r - pow(beta,
//   max(1, r-1)) with prob gamma/2 each; flip s uniform bits; on strict
//   improvement reset r and the counter; accept equal fitness only at
//   r = 1; once the counter reaches the phase length, bump r.
// The stepper owns the deviation tables and phase lengths so repeated
// steps cost O(s + log n).
class SdFea {
public:
    SdFea(const FitnessFunction& f, const SdFeaParams& params);

    void reset(BitString x, double fx);
    void step(CountedFitness& f, RandomSource& rng);

    SdFeaState& state() noexcept { return st_; }
    const SdFeaState& state() const noexcept { return st_; }
    double best_fitness() const noexcept { return st_.fx; }
    bool hit_optimum() const noexcept { return hit_; }
    int phase() const noexcept { return st_.r; }
    int last_flip_count() const noexcept { return last_s_; }
    long double phase_limit(int r);

private:
    const PowerLawDist& up_dist(int r);
    const PowerLawDist& down_dist(int r);
    std::uint64_t phase_threshold(int r);

    int n_, rmax_;
    double opt_;
    SdFeaParams p_;
    SdFeaState st_;
    bool hit_ = false;
    int last_s_ = 0;
    std::vector<long double> ell_;
    std::vector<std::uint64_t> ell_ceil_;
    std::vector<std::unique_ptr<PowerLawDist>> up_, down_;
    SubsetSampler subset_;
    std::vector<int> pos_;
    BitString y_;
};

// One iteration of the SD-FEA against a caller-held state; exactly one
// fitness evaluation. Convenience wrapper over the stepper for callers
// that do not keep one around.
void sd_fea_step(SdFeaState& state, CountedFitness& f, const SdFeaParams& params,
                 RandomSource& rng);

// Binomial(n, p) sampler over a precomputed CDF table. The first eight
// table entries are compared branch-free (the common case for the small
// rates used here); longer walks fall back to a linear scan.
class CachedBinomial {
public:
    CachedBinomial(int n, double p);
    int sample(RandomSource& rng) const noexcept {
        const double u = rng.next_double();
        const int head = n_ < 7 ? n_ : 7;
        int k = 0;
        for (int j = 0; j <= head; ++j) k += u >= cdf_[static_cast<std::size_t>(j)];
        if (k > head) {
            while (k < n_ && u >= cdf_[static_cast<std::size_t>(k)]) ++k;
        }
        return k;
    }

private:
    int n_;
    std::vector<double> cdf_;  // cdf_[k] = Pr[X <= k]
};

// Randomized local search: one uniform bit flip, accepts equal fitness.
class Rls {
public:
    Rls(const FitnessFunction& f);
    void reset(BitString x, double fx);
    void step(CountedFitness& f, RandomSource& rng);
    double best_fitness() const noexcept { return fx_; }
    bool hit_optimum() const noexcept { return hit_; }
    int phase() const noexcept { return 1; }
    int last_flip_count() const noexcept { return 1; }
    const BitString& x() const noexcept { return x_; }

private:
    int n_;
    double opt_;
    BitString x_, y_;
    double fx_ = 0.0;
    bool hit_ = false;
};

// (1+1) EA with standard bit mutation at rate 1/n, accepts equal fitness.
class OnePlusOneEa {
public:
    OnePlusOneEa(const FitnessFunction& f);
    void reset(BitString x, double fx);
    void step(CountedFitness& f, RandomSource& rng);
    double best_fitness() const noexcept { return fx_; }
    bool hit_optimum() const noexcept { return hit_; }
    int phase() const noexcept { return 1; }
    int last_flip_count() const noexcept { return last_s_; }

private:
    int n_;
    double opt_;
    CachedBinomial flips_;
    SubsetSampler subset_;
    std::vector<int> pos_;
    BitString x_, y_;
    double fx_ = 0.0;
    bool hit_ = false;
    int last_s_ = 0;
};

// Fast (1+1) EA: every iteration draws alpha from pow(beta, rate_cap)
// and mutates at rate alpha/n; accepts equal fitness.
class FastEa {
public:
    FastEa(const FitnessFunction& f, double beta, int rate_cap);
    void reset(BitString x, double fx);
    void step(CountedFitness& f, RandomSource& rng);
    double best_fitness() const noexcept { return fx_; }
    bool hit_optimum() const noexcept { return hit_; }
    int phase() const noexcept { return 1; }
    int last_flip_count() const noexcept { return last_s_; }

private:
    int n_;
    double opt_;
    PowerLawDist rate_;
    std::vector<std::unique_ptr<CachedBinomial>> flips_;  // per alpha
    SubsetSampler subset_;
    std::vector<int> pos_;
    BitString x_, y_;
    double fx_ = 0.0;
    bool hit_ = false;
    int last_s_ = 0;
};

// SD-(1+1) EA: standard bit mutation at rate r/n with a stagnation
// counter; phase length 2 (e n / r)^r ln(n R); rate capped at n/2;
// strict improvements reset the rate, equal fitness accepted only at
// rate 1.
class SdOnePlusOneEa {
public:
    SdOnePlusOneEa(const FitnessFunction& f, double R, int rate_cap);
    void reset(BitString x, double fx);
    void step(CountedFitness& f, RandomSource& rng);
    double best_fitness() const noexcept { return fx_; }
    bool hit_optimum() const noexcept { return hit_; }
    int phase() const noexcept { return r_; }
    int last_flip_count() const noexcept { return last_s_; }
    std::uint64_t counter() const noexcept { return u_; }
    long double phase_limit(int r);

private:
    const CachedBinomial& flips(int r);
    std::uint64_t phase_threshold(int r);

    int n_, cap_;
    double opt_, R_;
    std::vector<long double> ell_;
    std::vector<std::uint64_t> ell_ceil_;
    std::vector<std::unique_ptr<CachedBinomial>> flips_;
    SubsetSampler subset_;
    std::vector<int> pos_;
    BitString x_, y_;
    double fx_ = 0.0;
    int r_ = 1;
    std::uint64_t u_ = 0;
    bool hit_ = false;
    int last_s_ = 0;
};

// Robust stagnation-detection RLS: an outer radius with an inner
// strength sweep s = radius, radius-1, ..., 1, each strength budgeted
// C(n, s) ln R iterations. Strict improvements reset to radius 1;
// equal fitness accepted only at strength 1.
class SdRlsR {
public:
    SdRlsR(const FitnessFunction& f, double R);
    void reset(BitString x, double fx);
    void step(CountedFitness& f, RandomSource& rng);
    double best_fitness() const noexcept { return fx_; }
    bool hit_optimum() const noexcept { return hit_; }
    int phase() const noexcept { return s_; }
    int radius() const noexcept { return radius_; }
    int last_flip_count() const noexcept { return last_s_; }
    long double strength_limit(int s);

private:
    std::uint64_t strength_threshold(int s);

    int n_, rmax_;
    double opt_, R_;
    std::vector<long double> ell_;
    std::vector<std::uint64_t> ell_ceil_;
    SubsetSampler subset_;
    std::vector<int> pos_;
    BitString x_, y_;
    double fx_ = 0.0;
    int radius_ = 1, s_ = 1;
    std::uint64_t u_ = 0;
    bool hit_ = false;
    int last_s_ = 0;
};

// Named algorithm plus its parameter table. Unset parameters take the
// documented defaults (resolved against the problem size where needed).
struct AlgorithmSpec {
    std::string name;
    std::optional<double> beta;
    std::optional<double> gamma;
    std::optional<double> R;
    std::optional<int> rate_cap;

    void validate(int n) const;
    double resolved_R(int n) const;
    int resolved_rate_cap(int n) const;
    // Canonical series label, e.g. "sd-fea_b1.5_g0.25_R25".
    std::string label() const;
};

struct RunOutcome {
    std::uint64_t evaluations = 0;
    bool success = false;
    // Iterations spent per strength/rate value; filled only when traced.
    std::vector<std::uint64_t> phase_iterations;
};

struct RunOptions {
    const BitString* initial = nullptr;
    bool collect_trace = false;
};

// Full budgeted run: uniform random start (unless forced), evaluations
// counted from the initial point, stops the moment a maximal-fitness
// point is evaluated or the budget runs out.
RunOutcome run_optimizer(const AlgorithmSpec& spec, const FitnessFunction& f,
                         std::uint64_t budget, std::uint64_t seed,
                         const RunOptions& opts = {});

}  // namespace sdfea
