#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sdfea/config.hpp"

namespace sdfea {

// One optimizer run inside an experiment, addressed by sweep point,
// algorithm variant and repetition index.
struct RunRecord {
    int point = 0;
    int algo = 0;
    int rep = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    bool success = false;
};

// Aggregate over the successful runs of one (point, algorithm) cell;
// censored runs are counted separately and excluded from the moments.
struct SummaryRecord {
    int point = 0;
    int algo = 0;
    int runs = 0;
    int censored = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double median = 0.0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
};

struct ExperimentResult {
    std::vector<RunRecord> runs;  // ordered by (point, algo, rep)
    std::vector<SummaryRecord> summaries;
};

// Per-run stream seed; depends only on the master seed and the row
// identity, never on scheduling.
std::uint64_t derive_run_seed(std::uint64_t master, int point, int algo, int rep);

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

// Executes repetitions x points x variants independent runs, statically
// partitioned over the worker threads. Results are identical for any
// thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg, ProgressFn progress = {});

std::vector<SummaryRecord> summarize(const ExperimentConfig& cfg,
                                     const std::vector<RunRecord>& runs);

std::string runs_csv(const ExperimentConfig& cfg, const std::vector<RunRecord>& runs);
std::string summary_csv(const ExperimentConfig& cfg,
                        const std::vector<SummaryRecord>& summaries);

// Reads a runs.csv back against the same configuration; rows are
// validated (labels, k values, derived seeds) so foreign or reseeded
// data is rejected rather than silently mixed in.
std::vector<RunRecord> parse_runs_csv(const ExperimentConfig& cfg, const std::string& text);

// Plot-ready table: one row per k, one tab-separated column of mean
// evaluations per algorithm variant. Missing (variant, k) cells and
// summaries without a sweep axis are errors.
std::string plot_data_from_summary_csv(const std::string& summary_text);
std::string plot_data(const ExperimentConfig& cfg,
                      const std::vector<SummaryRecord>& summaries);

// Runs cfg with its artifacts in out_dir (config.json, runs.csv,
// summary.csv). An existing experiment is refused unless resume is set;
// resuming keeps verified rows and computes only the missing ones.
ExperimentResult run_experiment_to_dir(const ExperimentConfig& cfg, const std::string& out_dir,
                                       bool resume, ProgressFn progress = {});

}  // namespace sdfea
