#include "sdfea/verification.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sdfea {

namespace {

BitString from_mask(std::uint64_t mask, int n) {
    BitString b(n);
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) b.set(i, true);
    return b;
}

std::uint64_t to_mask(const BitString& b) {
    std::uint64_t m = 0;
    for (int i = 0; i < b.size(); ++i)
        if (b.test(i)) m |= std::uint64_t{1} << i;
    return m;
}

}  // namespace

std::optional<int> brute_ind_gap(const FitnessFunction& f, const BitString& x) {
    const int n = x.size();
    if (n > 20) throw std::invalid_argument("brute_ind_gap: n must be <= 20");
    const double fx = f.evaluate(x);
    const std::uint64_t mx = to_mask(x);
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const int d = std::popcount(m ^ mx);
        if (d == 0 || d >= best) continue;
        if (f.evaluate(from_mask(m, n)) > fx) best = d;
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<int> brute_level_gap(const FitnessFunction& f, const BitString& x) {
    const int n = x.size();
    if (n > 16) throw std::invalid_argument("brute_level_gap: n must be <= 16");
    const double fx = f.evaluate(x);
    int worst = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const BitString y = from_mask(m, n);
        if (f.evaluate(y) != fx) continue;
        const auto gap = brute_ind_gap(f, y);
        if (!gap) return std::nullopt;  // the level contains a global optimum
        if (*gap > worst) worst = *gap;
    }
    return worst;
}

std::optional<GapReport> gap_report(const FitnessFunction& f, const BitString& x) {
    const auto ind = brute_ind_gap(f, x);
    if (!ind) return std::nullopt;
    const auto level = brute_level_gap(f, x);
    if (!level) return std::nullopt;
    return GapReport{x, *ind, *level};
}

bool is_local_optimum(const FitnessFunction& f, const BitString& x) {
    const double fx = f.evaluate(x);
    BitString y = x;
    for (int i = 0; i < x.size(); ++i) {
        y.flip(i);
        const bool better = f.evaluate(y) > fx;
        y.flip(i);
        if (better) return false;
    }
    return true;
}

// Series / continued-fraction evaluation of the regularized incomplete
// gamma functions (Numerical Recipes style).
double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;

    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-14;
    constexpr double kTiny = 1e-300;

    if (x < a + 1.0) {
        // P(a, x) by series, Q = 1 - P.
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < kMaxIter; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * kEps) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }

    // Q(a, x) by Lentz continued fraction.
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& observed,
                               const std::vector<double>& expected,
                               std::uint64_t samples) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("chi_square_gof: size mismatch");
    double total_p = 0.0;
    std::uint64_t total_o = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] < 0.0) throw std::invalid_argument("chi_square_gof: negative probability");
        total_p += expected[i];
        total_o += observed[i];
    }
    if (std::fabs(total_p - 1.0) > 1e-9)
        throw std::invalid_argument("chi_square_gof: expected probabilities must sum to 1");
    if (total_o != samples)
        throw std::invalid_argument("chi_square_gof: observed counts do not sum to samples");

    // Adjacent pooling until each bin expects at least 5 counts.
    std::vector<double> exp_pooled;
    std::vector<double> obs_pooled;
    double ep = 0.0, op = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        ep += expected[i] * static_cast<double>(samples);
        op += static_cast<double>(observed[i]);
        if (ep >= 5.0) {
            exp_pooled.push_back(ep);
            obs_pooled.push_back(op);
            ep = op = 0.0;
        }
    }
    if (ep > 0.0 || op > 0.0) {
        if (exp_pooled.empty()) {
            exp_pooled.push_back(ep);
            obs_pooled.push_back(op);
        } else {
            exp_pooled.back() += ep;
            obs_pooled.back() += op;
        }
    }
    if (exp_pooled.size() < 2)
        throw std::invalid_argument("chi_square_gof: degenerate single-bin input");

    ChiSquareResult res;
    res.pooled_bins = static_cast<int>(exp_pooled.size());
    res.dof = res.pooled_bins - 1;
    for (std::size_t i = 0; i < exp_pooled.size(); ++i) {
        const double diff = obs_pooled[i] - exp_pooled[i];
        res.statistic += diff * diff / exp_pooled[i];
    }
    res.p_value = gamma_q(static_cast<double>(res.dof) / 2.0, res.statistic / 2.0);
    return res;
}

EscapeTrial escape_time_trial(const FitnessFunction& f, const SdFeaParams& params,
                              const BitString& start, int reps,
                              std::uint64_t per_run_cap, std::uint64_t seed) {
    if (reps < 1) throw std::invalid_argument("escape_time_trial: reps must be >= 1");
    if (!is_local_optimum(f, start))
        throw std::invalid_argument("escape_time_trial: start is not a local optimum");

    const double f0 = f.evaluate(start);
    EscapeTrial trial;
    trial.mean_phase_iterations.assign(static_cast<std::size_t>(max_strength(f.n())) + 1, 0.0);
    trial.escape_phase_histogram.assign(trial.mean_phase_iterations.size(), 0);

    double total = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
        RandomSource rng = RandomSource::stream(seed, static_cast<std::uint64_t>(rep));
        SdFea alg(f, params);
        alg.reset(start, f0);
        CountedFitness counted(f);
        std::uint64_t iters = 0;
        bool escaped = false;
        while (iters < per_run_cap) {
            const int ph = alg.phase();
            alg.step(counted, rng);
            ++iters;
            trial.mean_phase_iterations[static_cast<std::size_t>(ph)] += 1.0;
            if (alg.best_fitness() > f0) {
                trial.escape_phase_histogram[static_cast<std::size_t>(ph)] += 1;
                escaped = true;
                break;
            }
        }
        if (!escaped) ++trial.censored;
        total += static_cast<double>(iters);
    }
    trial.mean_iterations = total / reps;
    for (auto& v : trial.mean_phase_iterations) v /= reps;
    return trial;
}

}  // namespace sdfea
