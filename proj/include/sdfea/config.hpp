#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdfea/algorithms.hpp"
#include "sdfea/fitness.hpp"

namespace sdfea {

// Error categories surfaced as distinct process exit codes by the CLI.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One experiment: a fitness function (with an optional k sweep), a list
// of algorithm variants, and execution settings. Parsed from a JSON file
// with strict key checking; unknown keys are errors.
struct ExperimentConfig {
    std::string function;  // onemax | leadingones | jump
    int n = 0;
    int delta = 0;         // jump only
    std::vector<int> ks;   // jump sweep axis; single value when not swept
    std::vector<AlgorithmSpec> algorithms;
    int repetitions = 200;
    std::uint64_t seed = 1;
    std::uint64_t budget = 1'000'000'000ULL;
    int threads = 0;       // 0 = hardware concurrency
    std::string output;    // optional default output directory

    void validate() const;

    // Number of function points in the sweep (1 when there is no sweep).
    int points() const { return function == "jump" ? static_cast<int>(ks.size()) : 1; }
    int point_k(int point) const { return function == "jump" ? ks[static_cast<std::size_t>(point)] : -1; }
    std::unique_ptr<FitnessFunction> make_function(int point) const;

    std::string to_json_text() const;
    // Serialization without execution-only fields (threads, output);
    // used to detect configuration mismatches on resume.
    std::string identity_json_text() const;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig load(const std::string& path);
    void save(const std::string& path) const;
};

// The bundled comparison: jump with n = 100, delta = 4, k = 4..13;
// SD-FEA at beta in {1.25, 1.5, 2} (gamma = 1/4, R = 25) against the
// (1+1) EA, the fast (1+1) EA (beta = 1.5) and the two stagnation
// detection baselines with R = n^2; 200 repetitions.
ExperimentConfig figure2_preset();

}  // namespace sdfea
