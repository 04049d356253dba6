// Experiment CLI: run configured experiments, emit the bundled preset,
// run the validation suites, and turn summaries into plot-ready tables.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sdfea/harness.hpp"
#include "sdfea/suites.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kConfigError = 2,
    kIoError = 3,
    kValidationError = 4,
};

sdfea::ProgressFn stderr_progress() {
    return [](std::uint64_t done, std::uint64_t total) {
        if (done == total || done % 50 == 0) {
            std::fprintf(stderr, "\r%llu/%llu runs", static_cast<unsigned long long>(done),
                         static_cast<unsigned long long>(total));
            if (done == total) std::fprintf(stderr, "\n");
            std::fflush(stderr);
        }
    };
}

int run_command(const std::string& config_path, int threads, std::uint64_t seed,
                bool seed_set, const std::string& out_dir, bool resume) {
    sdfea::ExperimentConfig cfg = sdfea::ExperimentConfig::load(config_path);
    if (threads >= 0) cfg.threads = threads;
    if (seed_set) cfg.seed = seed;
    std::string dir = !out_dir.empty() ? out_dir : cfg.output;
    if (dir.empty())
        throw sdfea::ConfigError("no output directory: set 'output' in the config or pass --out");
    cfg.validate();

    const auto result = sdfea::run_experiment_to_dir(cfg, dir, resume, stderr_progress());
    std::uint64_t censored = 0;
    for (const auto& s : result.summaries) censored += static_cast<std::uint64_t>(s.censored);
    std::cout << "wrote " << result.runs.size() << " runs across " << result.summaries.size()
              << " cells to " << dir << " (" << censored << " censored)\n";
    return kOk;
}

int preset_command(const std::string& name, const std::string& out_dir) {
    if (name != "figure2")
        throw sdfea::ConfigError("unknown preset '" + name + "' (available: figure2)");
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / "figure2.json";
    sdfea::figure2_preset().save(path.string());
    std::cout << path.string() << "\n";
    return kOk;
}

int verify_command(const std::string& suite) {
    std::vector<sdfea::suites::Check> checks;
    if (suite == "distribution") {
        checks = sdfea::suites::distribution_suite();
    } else if (suite == "bounds") {
        checks = sdfea::suites::bounds_suite();
    } else if (suite == "oracles") {
        checks = sdfea::suites::oracles_suite();
    } else {
        throw sdfea::ConfigError("unknown suite '" + suite +
                                 "' (available: distribution, bounds, oracles)");
    }
    const int failures = sdfea::suites::run_checks(checks, std::cout);
    if (failures > 0) {
        std::cout << failures << " of " << checks.size() << " checks failed\n";
        return kValidationError;
    }
    std::cout << "all " << checks.size() << " checks passed\n";
    return kOk;
}

int plotdata_command(const std::string& in_dir, const std::string& out_file) {
    const auto summary_path = std::filesystem::path(in_dir) / "summary.csv";
    std::ifstream in(summary_path);
    if (!in) throw sdfea::IoError("cannot open '" + summary_path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string table = sdfea::plot_data_from_summary_csv(buf.str());
    std::ofstream out(out_file);
    if (!out) throw sdfea::IoError("cannot write '" + out_file + "'");
    out << table;
    if (!out) throw sdfea::IoError("failed writing '" + out_file + "'");
    std::cout << out_file << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stagnation-detection optimizers and jump-benchmark experiments"};
    app.require_subcommand(1);

    std::string config_path, out_dir, preset_name = "figure2", suite, in_dir, out_file;
    int threads = -1;
    std::uint64_t seed = 0;
    bool resume = false;

    auto* run = app.add_subcommand("run", "run an experiment from a config file");
    run->add_option("--config", config_path, "experiment config (JSON)")->required();
    run->add_option("--threads", threads, "worker threads (0 = hardware)");
    auto* seed_opt = run->add_option("--seed", seed, "master seed override");
    run->add_option("--out", out_dir, "output directory (overrides config)");
    run->add_flag("--resume", resume, "resume into an existing output directory");

    auto* preset = app.add_subcommand("preset", "write a bundled experiment config");
    preset->add_option("name", preset_name, "preset name (figure2)")->required();
    preset->add_option("--out", out_dir, "directory for the config file")->required();

    auto* verify = app.add_subcommand("verify", "run a validation suite");
    verify->add_option("--suite", suite, "distribution | bounds | oracles")->required();

    auto* plotdata = app.add_subcommand("plotdata", "summary.csv -> plot-ready table");
    plotdata->add_option("--in", in_dir, "experiment output directory")->required();
    plotdata->add_option("--out", out_file, "output file (tab-separated)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_command(config_path, threads, seed, seed_opt->count() > 0, out_dir,
                               resume);
        if (preset->parsed()) return preset_command(preset_name, out_dir);
        if (verify->parsed()) return verify_command(suite);
        if (plotdata->parsed()) return plotdata_command(in_dir, out_file);
    } catch (const sdfea::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const sdfea::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kIoError;
    } catch (const sdfea::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
