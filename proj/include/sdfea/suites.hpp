#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace sdfea::suites {

struct CheckResult {
    bool pass = false;
    std::string details;
};

struct Check {
    std::string id;
    std::string summary;
    std::function<CheckResult()> run;
};

// Validation suites exposed through `verify --suite ...`. Statistical
// checks use fixed seeds and are retried once with a second fixed seed
// before counting as failed.
std::vector<Check> distribution_suite();
std::vector<Check> oracles_suite();
std::vector<Check> bounds_suite();

// The ten-point acceptance battery. The heavyweight jump comparison is
// executed once and shared between the ordering and the determinism
// checks. `only` filters by 1-based criterion number (empty = all).
std::vector<Check> acceptance_suite(const std::vector<int>& only = {});

// Runs checks in order, one pass/fail line each; returns the failure count.
int run_checks(const std::vector<Check>& checks, std::ostream& os);

}  // namespace sdfea::suites
