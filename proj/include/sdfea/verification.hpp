#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdfea/algorithms.hpp"
#include "sdfea/bitstring.hpp"
#include "sdfea/fitness.hpp"

namespace sdfea {

// Minimum Hamming distance from x to a strictly fitter point, by full
// enumeration of {0,1}^n (n <= 20). nullopt when no improving point
// exists, i.e. x is globally optimal.
std::optional<int> brute_ind_gap(const FitnessFunction& f, const BitString& x);

// Maximum individual gap over the fitness level of x, by enumerating the
// level and each member's gap (n <= 16). nullopt when the level is the
// optimal one.
std::optional<int> brute_level_gap(const FitnessFunction& f, const BitString& x);

// True when no Hamming-1 neighbor strictly improves, i.e. the individual
// gap exceeds 1. O(n) evaluations, usable at any n.
bool is_local_optimum(const FitnessFunction& f, const BitString& x);

struct GapReport {
    BitString point;
    int ind_gap = 0;    // 1 <= ind_gap <= level_gap <= n for non-optimal x
    int level_gap = 0;
};

// Both brute-force gaps for one point; nullopt when x sits in the
// optimal fitness level.
std::optional<GapReport> gap_report(const FitnessFunction& f, const BitString& x);

// Regularized upper incomplete gamma Q(a, x); the chi-square upper tail
// is Q(dof/2, stat/2).
double gamma_q(double a, double x);

struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 1.0;
    int dof = 0;
    int pooled_bins = 0;
};

// Pearson goodness-of-fit with adjacent pooling of bins whose expected
// count is below 5. Throws if everything pools into a single bin or the
// inputs are inconsistent.
ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& observed,
                               const std::vector<double>& expected,
                               std::uint64_t samples);

struct EscapeTrial {
    double mean_iterations = 0.0;          // to the first strict improvement
    std::vector<double> mean_phase_iterations;  // per strength, averaged over runs
    std::vector<std::uint64_t> escape_phase_histogram;  // strength at the improving step
    int censored = 0;                      // runs with no improvement within the cap
};

// Repeatedly runs the SD-FEA from a forced local optimum until the first
// strict improvement, reporting mean escape time and phase occupancy.
// The start must be a genuine local optimum (individual gap > 1).
EscapeTrial escape_time_trial(const FitnessFunction& f, const SdFeaParams& params,
                              const BitString& start, int reps,
                              std::uint64_t per_run_cap, std::uint64_t seed);

}  // namespace sdfea
