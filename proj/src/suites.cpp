#include "sdfea/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "sdfea/combinatorics.hpp"
#include "sdfea/harness.hpp"
#include "sdfea/verification.hpp"

namespace sdfea::suites {

namespace {

// Base seed for the statistical checks; each check derives its own
// stream and gets a single retry with an independent seed.
constexpr std::uint64_t kSeedA = 0x51DFEA01ULL;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// One retry with an independent seed, per the fixed flaky-test budget of
// the statistical checks.
CheckResult with_retry(const std::function<CheckResult(std::uint64_t)>& attempt,
                       std::uint64_t seed) {
    CheckResult first = attempt(seed);
    if (first.pass) return first;
    CheckResult second = attempt(mix64(seed ^ 0xDEADBEEFULL));
    second.details += " (after one retry; first attempt: " + first.details + ")";
    return second;
}

BitString point_with_ones(int n, int ones) {
    BitString x(n);
    for (int i = 0; i < ones; ++i) x.set(i, true);
    return x;
}

double mean_of(const std::vector<std::uint64_t>& v) {
    long double s = 0.0L;
    for (const auto x : v) s += static_cast<long double>(x);
    return static_cast<double>(s / static_cast<long double>(v.size()));
}

// ------------------------------------------------------------------ checks

CheckResult check_strength_distribution_gof() {
    const int n = 50;
    const std::uint64_t samples = 1'000'000;
    double min_p = 1.0;
    for (const int r : {1, 3, 10}) {
        for (const double gamma : {0.1, 0.25, 0.5}) {
            for (const double beta : {1.25, 1.5, 2.0}) {
                const auto expected = strength_distribution(r, n, gamma, beta);
                auto attempt = [&](std::uint64_t seed) {
                    RandomSource rng(seed);
                    const StrengthDist dist(r, n, gamma, beta);
                    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
                    for (std::uint64_t i = 0; i < samples; ++i)
                        counts[static_cast<std::size_t>(dist.sample(rng))]++;
                    const auto gof = chi_square_gof(counts, expected, samples);
                    CheckResult res;
                    res.pass = gof.p_value > 1e-3;
                    res.details = "r=" + std::to_string(r) + " gamma=" + fmt(gamma) +
                                  " beta=" + fmt(beta) + " p=" + fmt(gof.p_value);
                    return res;
                };
                const auto res = with_retry(
                    attempt, RandomSource::stream_seed(kSeedA, static_cast<std::uint64_t>(
                                                                   r * 1000 + int(gamma * 100) * 10 +
                                                                   int(beta * 4))));
                if (!res.pass) return res;
                // track the weakest accepted fit for the report
                const auto pos = res.details.find("p=");
                if (pos != std::string::npos) min_p = std::min(min_p, std::stod(res.details.substr(pos + 2)));
            }
        }
    }
    return {true, "27 parameter combinations, 1e6 samples each, min p=" + fmt(min_p)};
}

CheckResult check_power_law_normalization() {
    double worst = 0.0;
    for (const double beta : {1.25, 1.5, 2.0}) {
        for (int u = 1; u <= 10'000; ++u) {
            const PowerLawDist d(beta, u);  // construction itself enforces 1e-12
            long double mass = 0.0L;
            for (int i = 1; i <= u; ++i) mass += d.pmf(i);
            worst = std::max(worst, std::fabs(static_cast<double>(mass - 1.0L)));
        }
    }
    CheckResult res;
    res.pass = worst <= 1e-12;
    res.details = "max |sum - 1| = " + fmt(worst) + " over beta in {1.25,1.5,2}, u <= 1e4";
    return res;
}

CheckResult check_onemax_runtime() {
    const int n = 500;
    const int reps = 200;
    const OneMax f(n);
    AlgorithmSpec spec;
    spec.name = "sd-fea";
    spec.beta = 1.5;
    spec.gamma = 0.25;
    spec.R = 25.0;
    std::vector<std::uint64_t> evals;
    for (int rep = 0; rep < reps; ++rep) {
        const auto out = run_optimizer(spec, f, 100'000'000ULL,
                                       RandomSource::stream_seed(kSeedA + 3, rep));
        if (!out.success) return {false, "run " + std::to_string(rep) + " hit the budget"};
        evals.push_back(out.evaluations);
    }
    const double mean = mean_of(evals);
    const double nln = n * std::log(n);
    CheckResult res;
    res.pass = mean >= 0.8 * nln && mean <= 2.0 * nln;
    res.details = "mean=" + fmt(mean) + " over " + std::to_string(reps) +
                  " runs, required [" + fmt(0.8 * nln) + ", " + fmt(2.0 * nln) + "]";
    return res;
}

CheckResult check_leadingones_runtime() {
    const int n = 200;
    const int reps = 200;
    const LeadingOnes f(n);
    AlgorithmSpec spec;
    spec.name = "sd-fea";
    spec.beta = 1.5;
    spec.gamma = 0.25;
    spec.R = 25.0;
    std::vector<std::uint64_t> evals;
    for (int rep = 0; rep < reps; ++rep) {
        const auto out = run_optimizer(spec, f, 100'000'000ULL,
                                       RandomSource::stream_seed(kSeedA + 4, rep));
        if (!out.success) return {false, "run " + std::to_string(rep) + " hit the budget"};
        evals.push_back(out.evaluations);
    }
    const double mean = mean_of(evals);
    const double n2 = static_cast<double>(n) * n;
    CheckResult res;
    res.pass = mean >= 0.7 * n2 && mean <= 2.0 * n2;
    res.details = "mean=" + fmt(mean) + " over " + std::to_string(reps) +
                  " runs, required [" + fmt(0.7 * n2) + ", " + fmt(2.0 * n2) + "]";
    return res;
}

// Shared between the escape-runtime and time-above-gap criteria.
struct JumpEscapeStats {
    double mean_evals = 0.0;
    double mean_above_gap = 0.0;
    int reps = 0;
    bool all_succeeded = true;
};

JumpEscapeStats jump_escape_runs() {
    const int n = 40;
    const int delta = 2;
    const int reps = 500;
    const JumpKDelta f(n, delta, delta);
    AlgorithmSpec spec;
    spec.name = "sd-fea";
    spec.beta = 1.5;
    spec.gamma = 0.25;
    spec.R = 25.0;
    RunOptions opts;
    opts.collect_trace = true;

    JumpEscapeStats st;
    st.reps = reps;
    long double evals = 0.0L, above = 0.0L;
    for (int rep = 0; rep < reps; ++rep) {
        const auto out = run_optimizer(spec, f, 100'000'000ULL,
                                       RandomSource::stream_seed(kSeedA + 5, rep), opts);
        if (!out.success) {
            st.all_succeeded = false;
            continue;
        }
        evals += static_cast<long double>(out.evaluations);
        for (std::size_t r = delta + 1; r < out.phase_iterations.size(); ++r)
            above += static_cast<long double>(out.phase_iterations[r]);
    }
    st.mean_evals = static_cast<double>(evals / reps);
    st.mean_above_gap = static_cast<double>(above / reps);
    return st;
}

CheckResult check_jump_escape_runtime(const JumpEscapeStats& st) {
    const double target = std::exp(log_binomial(40, 2)) / 0.75;  // 1040
    CheckResult res;
    res.pass = st.all_succeeded && st.mean_evals >= target / 2.0 &&
               st.mean_evals <= target * 2.0;
    res.details = "mean=" + fmt(st.mean_evals) + " over " + std::to_string(st.reps) +
                  " runs, required [" + fmt(target / 2.0) + ", " + fmt(target * 2.0) + "]";
    return res;
}

CheckResult check_time_above_gap(const JumpEscapeStats& st) {
    CheckResult res;
    const double limit = 0.05 * st.mean_evals;
    res.pass = st.all_succeeded && st.mean_above_gap <= limit;
    res.details = "mean iterations at strengths > 2: " + fmt(st.mean_above_gap) +
                  ", limit 5% of mean total = " + fmt(limit);
    return res;
}

// ---------------------------------------------------------- jump comparison

struct ComparisonTable {
    ExperimentConfig cfg;
    std::vector<int> ks;
    std::vector<std::string> labels;          // config order
    std::map<std::pair<int, std::string>, SummaryRecord> cells;
    std::string summary_bytes;

    double mean(int k, const std::string& label) const {
        const auto it = cells.find({k, label});
        if (it == cells.end() || it->second.runs == it->second.censored)
            throw ValidationError("comparison: no successful runs for '" + label +
                                  "' at k=" + std::to_string(k));
        return it->second.mean;
    }
};

ProgressFn make_progress_printer(const std::string& tag) {
    return [tag](std::uint64_t done, std::uint64_t total) {
        if (done == total || done % 100 == 0) {
            std::fprintf(stderr, "\r  [%s] %llu/%llu runs", tag.c_str(),
                         static_cast<unsigned long long>(done),
                         static_cast<unsigned long long>(total));
            if (done == total) std::fprintf(stderr, "\n");
            std::fflush(stderr);
        }
    };
}

ComparisonTable run_comparison(const ExperimentConfig& cfg, const std::string& tag) {
    ComparisonTable t;
    t.cfg = cfg;
    t.ks = cfg.ks;
    for (const auto& a : cfg.algorithms) t.labels.push_back(a.label());
    const auto result = run_experiment(cfg, make_progress_printer(tag));
    for (const auto& s : result.summaries)
        t.cells[{cfg.point_k(s.point), cfg.algorithms[static_cast<std::size_t>(s.algo)].label()}] = s;
    t.summary_bytes = summary_csv(cfg, result.summaries);
    return t;
}

ExperimentConfig reduced_comparison_config() {
    ExperimentConfig cfg = figure2_preset();
    cfg.ks = {4, 6, 8, 10, 12};
    cfg.repetitions = 50;
    cfg.threads = 8;
    return cfg;
}

ExperimentConfig full_comparison_config() {
    ExperimentConfig cfg = figure2_preset();
    cfg.threads = 8;
    return cfg;
}

// Ordering and shape checks on one comparison table. The ratio window
// around the k=4 overhead only has statistical power at the full run
// count, so the reduced gate checks orderings alone.
std::string comparison_findings(const ComparisonTable& t, const std::vector<int>& middle_ks,
                                bool with_ratio_window) {
    std::ostringstream problems;
    const std::string rls_label = "sd-rls-r_R10000";
    const std::vector<std::string> sd_fea = {"sd-fea_b1.25_g0.25_R25", "sd-fea_b1.5_g0.25_R25",
                                             "sd-fea_b2_g0.25_R25"};

    // (a) at k=4 the sweeping baseline is strictly best; each heavy-tailed
    // variant pays roughly the 1/(1-gamma) overhead, within 25%.
    const double base = t.mean(4, rls_label);
    for (const auto& label : t.labels) {
        if (label == rls_label) continue;
        if (t.mean(4, label) <= base)
            problems << "k=4: '" << label << "' (" << fmt(t.mean(4, label))
                     << ") not above '" << rls_label << "' (" << fmt(base) << "); ";
    }
    if (with_ratio_window) {
        for (const auto& label : sd_fea) {
            const double ratio = t.mean(4, label) / base;
            if (ratio < 1.0 || ratio > 5.0 / 3.0)
                problems << "k=4: ratio " << fmt(ratio) << " for '" << label
                         << "' outside [1, 1.667]; ";
        }
    }

    // (b) in the middle regime some heavy-tailed SD variant is the best.
    for (const int k : middle_ks) {
        double best_sd = 1e300, best_other = 1e300;
        for (const auto& label : t.labels) {
            const double m = t.mean(k, label);
            const bool is_sd = std::find(sd_fea.begin(), sd_fea.end(), label) != sd_fea.end();
            (is_sd ? best_sd : best_other) = std::min(is_sd ? best_sd : best_other, m);
        }
        if (!(best_sd < best_other))
            problems << "k=" << k << ": best sd-fea " << fmt(best_sd)
                     << " not below best comparator " << fmt(best_other) << "; ";
    }

    // (c) flatness of the sweeping baseline for k >= 5, improvement of the
    // rate-based algorithms across the same range.
    std::vector<int> tail_ks;
    for (const int k : t.ks)
        if (k >= 5) tail_ks.push_back(k);
    double lo = 1e300, hi = 0.0;
    for (const int k : tail_ks) {
        lo = std::min(lo, t.mean(k, rls_label));
        hi = std::max(hi, t.mean(k, rls_label));
    }
    if (!(hi / lo <= 1.5))
        problems << "'" << rls_label << "' not flat for k>=5: max/min=" << fmt(hi / lo)
                 << "; ";
    for (const std::string label : {"fea_b1.5", "sd-oea_R10000"}) {
        const double first = t.mean(tail_ks.front(), label);
        const double last = t.mean(tail_ks.back(), label);
        if (!(last < first))
            problems << "'" << label << "' does not improve from k=" << tail_ks.front()
                     << " (" << fmt(first) << ") to k=" << tail_ks.back() << " ("
                     << fmt(last) << "); ";
    }
    return problems.str();
}

// One pass of the two-stage comparison at the given master seed: the
// reduced gate runs first, the full preset is only computed (or fetched)
// once the gate holds.
std::string comparison_attempt(std::uint64_t seed,
                               const std::function<const ComparisonTable&()>& get_full) {
    ExperimentConfig reduced_cfg = reduced_comparison_config();
    reduced_cfg.seed = seed;
    const ComparisonTable reduced = run_comparison(reduced_cfg, "jump comparison, reduced");
    std::string issues = comparison_findings(reduced, {6}, false);
    if (!issues.empty())
        return "reduced scale (50 runs, k in {4,6,8,10,12}): " + issues;

    issues = comparison_findings(get_full(), {5, 6, 7}, true);
    if (!issues.empty()) return "full preset (200 runs, k=4..13): " + issues;
    return {};
}

CheckResult check_jump_comparison(const std::function<ComparisonTable&()>& ensure_full) {
    const std::uint64_t seed = full_comparison_config().seed;
    const std::string first = comparison_attempt(
        seed, [&]() -> const ComparisonTable& { return ensure_full(); });
    if (first.empty())
        return {true,
                "orderings hold at reduced scale and on the full preset (k=4: baseline "
                "best, heavy-tailed overhead within [1, 1.667]; k in {5,6,7}: sd-fea best; "
                "baseline flat for k>=5 while rate-based comparators keep improving)"};

    ComparisonTable retry_full;
    const std::string second =
        comparison_attempt(seed + 1, [&]() -> const ComparisonTable& {
            ExperimentConfig cfg = full_comparison_config();
            cfg.seed = seed + 1;
            retry_full = run_comparison(cfg, "jump comparison, full preset (retry)");
            return retry_full;
        });
    if (second.empty())
        return {true, "passed on the retry seed (first attempt: " + first + ")"};
    return {false, second + " (after one retry; first attempt: " + first + ")"};
}

CheckResult check_gap_oracles() {
    int instances = 0;
    // Unimodal benchmarks: every non-optimal point has individual gap 1.
    for (const int n : {6, 8, 10, 12}) {
        const OneMax om(n);
        const LeadingOnes lo(n);
        for (const FitnessFunction* f : {static_cast<const FitnessFunction*>(&om),
                                         static_cast<const FitnessFunction*>(&lo)}) {
            ++instances;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                BitString x(n);
                for (int i = 0; i < n; ++i)
                    if ((m >> i) & 1u) x.set(i, true);
                const auto gap = brute_ind_gap(*f, x);
                if (f->is_optimum(x)) {
                    if (gap) return {false, f->name() + " n=" + std::to_string(n) +
                                                ": optimum reported a gap"};
                } else if (!gap || *gap != 1) {
                    return {false, f->name() + " n=" + std::to_string(n) +
                                       ": non-optimal point with gap != 1"};
                }
            }
        }
    }
    // Jump local optima (ones = n-k) have individual and level gap delta.
    const std::vector<std::tuple<int, int, int>> jump_grid = {
        {10, 2, 2}, {10, 3, 3}, {10, 4, 2}, {10, 4, 4},
        {12, 3, 1}, {12, 4, 2}, {12, 4, 4}, {12, 6, 4},
    };
    for (const auto& [n, k, delta] : jump_grid) {
        ++instances;
        const JumpKDelta f(n, k, delta);
        bool checked_level = false;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            BitString x(n);
            for (int i = 0; i < n; ++i)
                if ((m >> i) & 1u) x.set(i, true);
            if (x.ones_count() != n - k) continue;
            const auto gap = brute_ind_gap(f, x);
            if (!gap || *gap != delta)
                return {false, "jump n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   " delta=" + std::to_string(delta) +
                                   ": local optimum with individual gap != delta"};
            if (!checked_level) {
                const auto level = brute_level_gap(f, x);
                if (!level || *level != delta)
                    return {false, "jump n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                       " delta=" + std::to_string(delta) +
                                       ": level gap != delta"};
                checked_level = true;
            }
        }
    }
    return {true, std::to_string(instances) + " benchmark instances, exhaustive over {0,1}^n"};
}

CheckResult check_binomial_partial_sum() {
    using u128 = unsigned __int128;
    for (int n = 1; n <= 60; ++n) {
        std::vector<u128> row(static_cast<std::size_t>(n) + 1);
        row[0] = 1;
        for (int i = 1; i <= n; ++i)
            row[static_cast<std::size_t>(i)] =
                row[static_cast<std::size_t>(i - 1)] * static_cast<unsigned>(n - i + 1) /
                static_cast<unsigned>(i);
        u128 prefix = 0;
        for (int m = 1; m <= n / 2; ++m) {
            prefix += row[static_cast<std::size_t>(m)];
            // sum_{i<=m} C(n,i) <= (n-m+1)/(n-2m+1) * C(n,m), cross-multiplied
            const u128 lhs = prefix * static_cast<unsigned>(n - 2 * m + 1);
            const u128 rhs = row[static_cast<std::size_t>(m)] * static_cast<unsigned>(n - m + 1);
            if (lhs > rhs)
                return {false, "violated at n=" + std::to_string(n) + ", m=" + std::to_string(m)};
        }
    }
    return {true, "exact 128-bit arithmetic, all n <= 60, m <= n/2"};
}

CheckResult check_thread_determinism(ComparisonTable& full_8t) {
    ExperimentConfig cfg = full_comparison_config();
    cfg.threads = 1;
    const auto table_1t = run_comparison(cfg, "jump comparison, 1 thread");
    CheckResult res;
    res.pass = table_1t.summary_bytes == full_8t.summary_bytes;
    res.details = res.pass ? "summary CSVs are byte-identical for 1 and 8 threads"
                           : "summary CSVs differ between 1 and 8 threads";
    return res;
}

// --------------------------------------------------- extra bounds checks

CheckResult check_escape_strength_fraction() {
    const int n = 30, delta = 2;
    const JumpKDelta f(n, delta, delta);
    const BitString start = point_with_ones(n, n - delta);
    const int reps = 500;
    auto attempt = [&](std::uint64_t seed) {
        const auto trial =
            escape_time_trial(f, SdFeaParams{1.5, 0.0, 25.0}, start, reps, 50'000, seed);
        int at_delta = 0;
        for (std::size_t r = 0; r < trial.escape_phase_histogram.size(); ++r) {
            if (static_cast<int>(r) < delta && trial.escape_phase_histogram[r] != 0)
                return CheckResult{false, "escape recorded below strength delta"};
            if (static_cast<int>(r) == delta)
                at_delta = static_cast<int>(trial.escape_phase_histogram[r]);
        }
        const double frac = static_cast<double>(at_delta) / reps;
        const double target = 1.0 - 1.0 / 25.0;
        // One-sided z test at significance 1e-3 on the binomial fraction.
        const double slack = 3.09 * std::sqrt(target * (1.0 - target) / reps);
        CheckResult res;
        res.pass = frac >= target - slack;
        res.details = "fraction escaping at strength delta: " + fmt(frac) + ", required >= " +
                      fmt(target - slack) + " (target 1 - 1/R = " + fmt(target) + ")";
        return res;
    };
    return with_retry(attempt, kSeedA + 11);
}

CheckResult check_time_above_gap_bound() {
    const int n = 30, delta = 2;
    const JumpKDelta f(n, delta, delta);
    const BitString start = point_with_ones(n, n - delta);
    const int reps = 1000;
    const double gamma = 0.25, beta = 1.5, R = 25.0;
    auto attempt = [&](std::uint64_t seed) {
        const auto trial =
            escape_time_trial(f, SdFeaParams{beta, gamma, R}, start, reps, 1'000'000, seed);
        double above = 0.0;
        for (std::size_t r = delta + 1; r < trial.mean_phase_iterations.size(); ++r)
            above += trial.mean_phase_iterations[r];
        // Dominant-phase bound: failing the right phase happens with
        // probability about 1/R and then costs one geometric round at
        // the first deviated strength.
        const PowerLawDist down(beta, delta);
        const double per_entry = std::exp(log_binomial(n, delta)) /
                                 (gamma / 2.0 * down.pmf(1));
        const double bound = 1.75 * (1.0 / R) * per_entry;
        CheckResult res;
        res.pass = trial.censored == 0 && above <= bound;
        res.details = "mean iterations above the gap: " + fmt(above) + ", bound " + fmt(bound);
        return res;
    };
    return with_retry(attempt, kSeedA + 12);
}

CheckResult check_time_above_gap_smallscale() {
    const int n = 30, delta = 2;
    const JumpKDelta f(n, delta, delta);
    const BitString start = point_with_ones(n, n - delta);
    const int reps = 500;
    const auto trial = escape_time_trial(f, SdFeaParams{1.5, 0.25, 25.0}, start, reps,
                                         1'000'000, kSeedA + 13);
    double above = 0.0;
    for (std::size_t r = delta + 1; r < trial.mean_phase_iterations.size(); ++r)
        above += trial.mean_phase_iterations[r];
    const double limit = 0.05 * std::exp(log_binomial(n, delta)) / 0.75;
    CheckResult res;
    res.pass = above <= limit;
    res.details = "mean iterations above the gap: " + fmt(above) + ", limit " + fmt(limit);
    return res;
}

CheckResult check_rls_onemax_runtime() {
    const int n = 100;
    const int reps = 200;
    const OneMax f(n);
    AlgorithmSpec spec;
    spec.name = "rls";
    auto attempt = [&](std::uint64_t seed) {
        std::vector<std::uint64_t> evals;
        for (int rep = 0; rep < reps; ++rep) {
            const auto out =
                run_optimizer(spec, f, 10'000'000ULL, RandomSource::stream_seed(seed, rep));
            if (!out.success) return CheckResult{false, "run hit the budget"};
            evals.push_back(out.evaluations);
        }
        const double mean = mean_of(evals);
        const double nln = n * std::log(n);
        CheckResult res;
        res.pass = mean >= 0.85 * nln && mean <= 1.3 * nln;
        res.details = "mean=" + fmt(mean) + ", required [" + fmt(0.85 * nln) + ", " +
                      fmt(1.3 * nln) + "]";
        return res;
    };
    return with_retry(attempt, kSeedA + 14);
}

CheckResult check_escape_monotonicity() {
    const int n = 30;
    const int reps = 500;
    const JumpKDelta narrow(n, 4, 4);  // single improving target
    const JumpKDelta wide(n, 6, 4);    // many improving targets
    const BitString start_narrow = point_with_ones(n, n - 4);
    const BitString start_wide = point_with_ones(n, n - 6);
    const SdFeaParams params{1.5, 0.25, 25.0};
    auto attempt = [&](std::uint64_t seed) {
        const auto narrow_trial =
            escape_time_trial(narrow, params, start_narrow, reps, 10'000'000, seed);
        const auto wide_trial =
            escape_time_trial(wide, params, start_wide, reps, 10'000'000, seed + 1);
        CheckResult res;
        res.pass = wide_trial.mean_iterations <= narrow_trial.mean_iterations;
        res.details = "mean escape with many targets " + fmt(wide_trial.mean_iterations) +
                      " vs single target " + fmt(narrow_trial.mean_iterations);
        return res;
    };
    return with_retry(attempt, kSeedA + 15);
}

CheckResult check_power_law_examples() {
    // u = 1 is deterministic.
    {
        PowerLawDist d(1.5, 1);
        RandomSource rng(1);
        for (int i = 0; i < 1000; ++i)
            if (d.sample(rng) != 1) return {false, "u=1 sample differs from 1"};
    }
    // beta=2, u=2: exact pmf 0.8 / 0.2.
    {
        PowerLawDist d(2.0, 2);
        if (std::fabs(d.pmf(1) - 0.8) > 1e-12 || std::fabs(d.pmf(2) - 0.2) > 1e-12)
            return {false, "beta=2, u=2 pmf differs from (0.8, 0.2)"};
    }
    // beta=1.5, u=3 empirical frequencies against the closed form.
    auto attempt = [&](std::uint64_t seed) {
        PowerLawDist d(1.5, 3);
        RandomSource rng(seed);
        const std::uint64_t samples = 1'000'000;
        std::vector<std::uint64_t> counts(4, 0);
        for (std::uint64_t i = 0; i < samples; ++i)
            counts[static_cast<std::size_t>(d.sample(rng))]++;
        std::vector<double> expected(4, 0.0);
        for (int i = 1; i <= 3; ++i) expected[static_cast<std::size_t>(i)] = d.pmf(i);
        const auto gof = chi_square_gof(counts, expected, samples);
        CheckResult res;
        res.pass = gof.p_value > 1e-3;
        res.details = "beta=1.5, u=3 chi-square p=" + fmt(gof.p_value);
        return res;
    };
    const auto res = with_retry(attempt, kSeedA + 16);
    if (!res.pass) return res;
    return {true, "degenerate support, exact two-point pmf and " + res.details};
}

CheckResult check_strength_examples() {
    // gamma = 0 always returns r.
    {
        const StrengthDist d(3, 20, 0.0, 1.5);
        RandomSource rng(7);
        for (int i = 0; i < 2000; ++i)
            if (d.sample(rng) != 3) return {false, "gamma=0 produced a deviation"};
    }
    // r=1: Pr[0] = gamma/2, Pr[1] = 1-gamma.
    {
        const auto p = strength_distribution(1, 10, 0.25, 1.5);
        if (std::fabs(p[0] - 0.125) > 1e-12 || std::fabs(p[1] - 0.75) > 1e-12)
            return {false, "r=1 closed form differs from (gamma/2, 1-gamma)"};
    }
    // r=3, n=10: spot values of the closed form.
    {
        const auto p = strength_distribution(3, 10, 0.25, 1.5);
        const double c = 1.0 / (1.0 + std::pow(2.0, -1.5));
        if (std::fabs(p[3] - 0.75) > 1e-12 ||
            std::fabs(p[2] - 0.125 * c) > 1e-9 ||
            std::fabs(p[1] - 0.125 * c * std::pow(2.0, -1.5)) > 1e-9)
            return {false, "r=3, n=10 closed form differs from direct evaluation"};
    }
    // Mass below r is exactly gamma/2 for r >= 2, and the vector sums to 1.
    for (int r = 2; r <= max_strength(50); ++r) {
        const auto p = strength_distribution(r, 50, 0.25, 1.5);
        long double below = 0.0L, total = 0.0L;
        for (std::size_t i = 0; i < p.size(); ++i) {
            total += p[i];
            if (static_cast<int>(i) < r) below += p[i];
        }
        if (std::fabs(static_cast<double>(below - 0.125L)) > 1e-12)
            return {false, "mass below r differs from gamma/2 at r=" + std::to_string(r)};
        if (std::fabs(static_cast<double>(total - 1.0L)) > 1e-12)
            return {false, "closed form does not sum to 1 at r=" + std::to_string(r)};
    }
    return {true, "deterministic branch, closed-form spot values and tail masses"};
}

CheckResult check_hamming_metric() {
    const int n = 8;
    const int size = 1 << n;
    std::vector<BitString> pts;
    pts.reserve(static_cast<std::size_t>(size));
    for (int m = 0; m < size; ++m) {
        BitString x(n);
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1) x.set(i, true);
        pts.push_back(x);
    }
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            const int dab = hamming_distance(pts[a], pts[b]);
            if ((dab == 0) != (a == b)) return {false, "identity violated"};
            if (dab != hamming_distance(pts[b], pts[a])) return {false, "symmetry violated"};
            for (int c = 0; c < size; ++c)
                if (dab > hamming_distance(pts[a], pts[c]) + hamming_distance(pts[c], pts[b]))
                    return {false, "triangle inequality violated"};
        }
    }
    return {true, "identity, symmetry and triangle inequality over all pairs, n=8"};
}

CheckResult check_classic_jump_consistency() {
    for (const int n : {6, 9, 12}) {
        for (const int delta : {2, 3}) {
            const JumpKDelta f(n, delta, delta);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                BitString x(n);
                for (int i = 0; i < n; ++i)
                    if ((m >> i) & 1u) x.set(i, true);
                const int ones = x.ones_count();
                // classic jump, written out independently
                const double classic = (ones <= n - delta || ones == n)
                                           ? static_cast<double>(ones)
                                           : static_cast<double>(-ones);
                if (f.evaluate(x) != classic)
                    return {false, "divergence at n=" + std::to_string(n) +
                                       " delta=" + std::to_string(delta)};
            }
        }
    }
    return {true, "k = delta agrees with the classic definition on all points, n <= 12"};
}

}  // namespace

std::vector<Check> distribution_suite() {
    return {
        {"power-law-normalization", "power-law tables normalize to 1 within 1e-12",
         check_power_law_normalization},
        {"power-law-examples", "power-law sampler matches its closed form",
         check_power_law_examples},
        {"strength-examples", "strength distribution closed form and branch masses",
         check_strength_examples},
        {"strength-distribution-gof",
         "sampled strengths match the closed form (chi-square, 1e6 draws)",
         check_strength_distribution_gof},
    };
}

std::vector<Check> oracles_suite() {
    return {
        {"gap-oracles", "claimed gaps match brute-force enumeration on the benchmark grid",
         check_gap_oracles},
        {"binomial-partial-sum", "partial binomial sums obey the exact inequality",
         check_binomial_partial_sum},
        {"hamming-metric", "hamming distance is a metric", check_hamming_metric},
        {"classic-jump-consistency", "jump with k = delta equals the classic jump",
         check_classic_jump_consistency},
    };
}

std::vector<Check> bounds_suite() {
    auto stats = std::make_shared<std::optional<JumpEscapeStats>>();
    auto ensure = [stats] {
        if (!stats->has_value()) *stats = jump_escape_runs();
        return **stats;
    };
    return {
        {"onemax-runtime", "mean runtime on onemax(n=500) within [0.8, 2.0] n ln n",
         check_onemax_runtime},
        {"leadingones-runtime", "mean runtime on leadingones(n=200) within [0.7, 2.0] n^2",
         check_leadingones_runtime},
        {"jump-escape-runtime",
         "mean runtime on jump(n=40, delta=2) within a factor 2 of C(n,2)/(1-gamma)",
         [ensure] { return check_jump_escape_runtime(ensure()); }},
        {"time-above-gap",
         "iterations above the gap strength stay below 5% of the mean runtime",
         [ensure] { return check_time_above_gap(ensure()); }},
        {"time-above-gap-bound",
         "iterations above the gap strength obey the dominant-phase bound",
         check_time_above_gap_bound},
        {"time-above-gap-smallscale",
         "iterations above the gap below 5% of C(n,delta)/(1-gamma) at n=30",
         check_time_above_gap_smallscale},
        {"escape-strength-fraction",
         "with gamma=0 escapes happen at the gap strength in >= 1 - 1/R of runs",
         check_escape_strength_fraction},
        {"rls-onemax-runtime", "rls mean runtime on onemax(n=100) near n ln n",
         check_rls_onemax_runtime},
        {"escape-monotonicity", "more improving targets never slow the escape",
         check_escape_monotonicity},
    };
}

std::vector<Check> acceptance_suite(const std::vector<int>& only) {
    auto escape_stats = std::make_shared<std::optional<JumpEscapeStats>>();
    auto ensure_escape = [escape_stats] {
        if (!escape_stats->has_value()) *escape_stats = jump_escape_runs();
        return **escape_stats;
    };
    auto full_table = std::make_shared<std::optional<ComparisonTable>>();
    auto ensure_full = [full_table]() -> ComparisonTable& {
        if (!full_table->has_value())
            *full_table =
                run_comparison(full_comparison_config(), "jump comparison, full preset");
        return **full_table;
    };

    const std::vector<Check> all = {
        {"criterion-1",
         "strength samples match the closed-form distribution (27 combos, chi-square)",
         check_strength_distribution_gof},
        {"criterion-2", "power-law normalization within 1e-12 for u up to 1e4",
         check_power_law_normalization},
        {"criterion-3", "onemax(n=500) mean runtime within [0.8, 2.0] n ln n",
         check_onemax_runtime},
        {"criterion-4", "leadingones(n=200) mean runtime within [0.7, 2.0] n^2",
         check_leadingones_runtime},
        {"criterion-5",
         "jump(n=40, delta=2) mean runtime within factor 2 of C(n,2)/(1-gamma)",
         [ensure_escape] { return check_jump_escape_runtime(ensure_escape()); }},
        {"criterion-6", "iterations above the gap at most 5% of the mean runtime",
         [ensure_escape] { return check_time_above_gap(ensure_escape()); }},
        {"criterion-7", "jump comparison reproduces the reference orderings",
         [ensure_full] { return check_jump_comparison(ensure_full); }},
        {"criterion-8", "gap claims agree with brute-force oracles (n <= 12)",
         check_gap_oracles},
        {"criterion-9", "binomial partial-sum inequality exact for n <= 60",
         check_binomial_partial_sum},
        {"criterion-10", "full comparison is byte-identical for 1 and 8 threads",
         [ensure_full] { return check_thread_determinism(ensure_full()); }},
    };
    if (only.empty()) return all;
    std::vector<Check> filtered;
    for (const int idx : only) {
        if (idx < 1 || idx > static_cast<int>(all.size()))
            throw std::invalid_argument("acceptance criterion index out of range");
        filtered.push_back(all[static_cast<std::size_t>(idx - 1)]);
    }
    return filtered;
}

int run_checks(const std::vector<Check>& checks, std::ostream& os) {
    int failures = 0;
    for (const auto& check : checks) {
        CheckResult result;
        try {
            result = check.run();
        } catch (const std::exception& e) {
            result.pass = false;
            result.details = std::string("exception: ") + e.what();
        }
        os << (result.pass ? "[PASS] " : "[FAIL] ") << check.id << ": " << check.summary;
        if (!result.details.empty()) os << " | " << result.details;
        os << '\n' << std::flush;
        if (!result.pass) ++failures;
    }
    return failures;
}

}  // namespace sdfea::suites
