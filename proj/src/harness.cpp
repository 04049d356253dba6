#include "sdfea/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace sdfea {

namespace {

namespace fs = std::filesystem;

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (const char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

template <class T>
T parse_number(const std::string& s, const char* what) {
    T v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ValidationError(std::string("runs.csv: bad ") + what + " value '" + s + "'");
    return v;
}

// Resolved parameter columns; empty when the algorithm has no such knob.
struct ParamColumns {
    std::string beta, gamma, R;
};

ParamColumns param_columns(const AlgorithmSpec& a, int n) {
    ParamColumns c;
    if (a.name == "sd-fea") {
        c.beta = format_double(a.beta.value_or(1.5));
        c.gamma = format_double(a.gamma.value_or(0.25));
        c.R = format_double(a.R.value_or(25.0));
    } else if (a.name == "fea") {
        c.beta = format_double(a.beta.value_or(1.5));
    } else if (a.name == "sd-oea" || a.name == "sd-rls-r") {
        c.R = format_double(a.resolved_R(n));
    }
    return c;
}

constexpr const char* kRunsHeader =
    "function,n,k,delta,algorithm,label,beta,gamma,R,rep,seed,evaluations,success";
constexpr const char* kSummaryHeader =
    "function,n,k,delta,algorithm,label,beta,gamma,R,runs,censored,mean,stddev,median,min,max";

std::string point_k_field(const ExperimentConfig& cfg, int point) {
    return cfg.function == "jump" ? std::to_string(cfg.point_k(point)) : std::string();
}

std::string delta_field(const ExperimentConfig& cfg) {
    return cfg.function == "jump" ? std::to_string(cfg.delta) : std::string();
}

}  // namespace

std::uint64_t derive_run_seed(std::uint64_t master, int point, int algo, int rep) {
    const std::uint64_t cell =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(point)) << 32) |
        static_cast<std::uint32_t>(algo);
    return RandomSource::stream_seed(RandomSource::stream_seed(master, cell),
                                     static_cast<std::uint64_t>(rep));
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, ProgressFn progress) {
    cfg.validate();
    const int P = cfg.points();
    const int A = static_cast<int>(cfg.algorithms.size());
    const int reps = cfg.repetitions;
    const std::uint64_t total =
        static_cast<std::uint64_t>(P) * static_cast<std::uint64_t>(A) *
        static_cast<std::uint64_t>(reps);

    std::vector<std::unique_ptr<FitnessFunction>> fns;
    fns.reserve(static_cast<std::size_t>(P));
    for (int p = 0; p < P; ++p) fns.push_back(cfg.make_function(p));

    ExperimentResult result;
    result.runs.resize(static_cast<std::size_t>(total));

    unsigned hw = std::thread::hardware_concurrency();
    const unsigned T = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : (hw > 0 ? hw : 1);

    std::mutex progress_mutex;
    std::uint64_t done = 0;

    auto worker = [&](unsigned w) {
        for (std::uint64_t t = w; t < total; t += T) {
            const int point = static_cast<int>(t / (static_cast<std::uint64_t>(A) * reps));
            const std::uint64_t rest = t % (static_cast<std::uint64_t>(A) * reps);
            const int algo = static_cast<int>(rest / reps);
            const int rep = static_cast<int>(rest % reps);

            RunRecord rec;
            rec.point = point;
            rec.algo = algo;
            rec.rep = rep;
            rec.seed = derive_run_seed(cfg.seed, point, algo, rep);
            const RunOutcome out =
                run_optimizer(cfg.algorithms[static_cast<std::size_t>(algo)],
                              *fns[static_cast<std::size_t>(point)], cfg.budget, rec.seed);
            rec.evaluations = out.evaluations;
            rec.success = out.success;
            result.runs[static_cast<std::size_t>(t)] = rec;

            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress(++done, total);
            }
        }
    };

    if (T <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(T);
        for (unsigned w = 0; w < T; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    result.summaries = summarize(cfg, result.runs);
    return result;
}

std::vector<SummaryRecord> summarize(const ExperimentConfig& cfg,
                                     const std::vector<RunRecord>& runs) {
    const int P = cfg.points();
    const int A = static_cast<int>(cfg.algorithms.size());
    const int reps = cfg.repetitions;
    if (runs.size() != static_cast<std::size_t>(P) * static_cast<std::size_t>(A) *
                           static_cast<std::size_t>(reps))
        throw ValidationError("summarize: incomplete run set");

    std::vector<SummaryRecord> out;
    out.reserve(static_cast<std::size_t>(P) * static_cast<std::size_t>(A));
    for (int p = 0; p < P; ++p) {
        for (int a = 0; a < A; ++a) {
            SummaryRecord s;
            s.point = p;
            s.algo = a;
            s.runs = reps;

            std::vector<std::uint64_t> evals;
            evals.reserve(static_cast<std::size_t>(reps));
            const std::size_t base =
                (static_cast<std::size_t>(p) * A + static_cast<std::size_t>(a)) * reps;
            for (int r = 0; r < reps; ++r) {
                const RunRecord& rec = runs[base + static_cast<std::size_t>(r)];
                if (rec.point != p || rec.algo != a || rec.rep != r)
                    throw ValidationError("summarize: run set is not in canonical order");
                if (rec.success) evals.push_back(rec.evaluations);
            }
            s.censored = reps - static_cast<int>(evals.size());
            if (!evals.empty()) {
                std::sort(evals.begin(), evals.end());
                unsigned __int128 sum = 0;
                for (const auto v : evals) sum += v;
                const auto cnt = static_cast<long double>(evals.size());
                s.mean = static_cast<double>(static_cast<long double>(sum) / cnt);
                long double sq = 0.0L;
                for (const auto v : evals) {
                    const long double d = static_cast<long double>(v) - s.mean;
                    sq += d * d;
                }
                s.stddev = evals.size() > 1
                               ? static_cast<double>(std::sqrt(sq / (cnt - 1.0L)))
                               : 0.0;
                const std::size_t m = evals.size() / 2;
                s.median = evals.size() % 2 == 1
                               ? static_cast<double>(evals[m])
                               : (static_cast<double>(evals[m - 1]) +
                                  static_cast<double>(evals[m])) /
                                     2.0;
                s.min = evals.front();
                s.max = evals.back();
            }
            out.push_back(s);
        }
    }
    return out;
}

std::string runs_csv(const ExperimentConfig& cfg, const std::vector<RunRecord>& runs) {
    std::ostringstream os;
    os << kRunsHeader << '\n';
    for (const auto& rec : runs) {
        const auto& alg = cfg.algorithms[static_cast<std::size_t>(rec.algo)];
        const ParamColumns pc = param_columns(alg, cfg.n);
        os << cfg.function << ',' << cfg.n << ',' << point_k_field(cfg, rec.point) << ','
           << delta_field(cfg) << ',' << alg.name << ',' << alg.label() << ',' << pc.beta
           << ',' << pc.gamma << ',' << pc.R << ',' << rec.rep << ',' << rec.seed << ','
           << rec.evaluations << ',' << (rec.success ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string summary_csv(const ExperimentConfig& cfg,
                        const std::vector<SummaryRecord>& summaries) {
    std::ostringstream os;
    os << kSummaryHeader << '\n';
    for (const auto& s : summaries) {
        const auto& alg = cfg.algorithms[static_cast<std::size_t>(s.algo)];
        const ParamColumns pc = param_columns(alg, cfg.n);
        os << cfg.function << ',' << cfg.n << ',' << point_k_field(cfg, s.point) << ','
           << delta_field(cfg) << ',' << alg.name << ',' << alg.label() << ',' << pc.beta
           << ',' << pc.gamma << ',' << pc.R << ',' << s.runs << ',' << s.censored << ',';
        if (s.runs > s.censored) {
            os << format_double(s.mean) << ',' << format_double(s.stddev) << ','
               << format_double(s.median) << ',' << s.min << ',' << s.max;
        } else {
            os << ",,,,";
        }
        os << '\n';
    }
    return os.str();
}

std::vector<RunRecord> parse_runs_csv(const ExperimentConfig& cfg, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != kRunsHeader)
        throw ValidationError("runs.csv: unexpected header");

    std::map<std::string, int> label_to_algo;
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i)
        label_to_algo[cfg.algorithms[i].label()] = static_cast<int>(i);
    std::map<std::string, int> k_to_point;
    for (int p = 0; p < cfg.points(); ++p) k_to_point[point_k_field(cfg, p)] = p;

    std::vector<RunRecord> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 13) throw ValidationError("runs.csv: malformed row '" + line + "'");
        if (f[0] != cfg.function || f[1] != std::to_string(cfg.n) || f[3] != delta_field(cfg))
            throw ValidationError("runs.csv: row does not match the configuration: '" + line + "'");
        const auto kp = k_to_point.find(f[2]);
        if (kp == k_to_point.end())
            throw ValidationError("runs.csv: unknown sweep value '" + f[2] + "'");
        const auto la = label_to_algo.find(f[5]);
        if (la == label_to_algo.end())
            throw ValidationError("runs.csv: unknown algorithm variant '" + f[5] + "'");

        RunRecord rec;
        rec.point = kp->second;
        rec.algo = la->second;
        rec.rep = parse_number<int>(f[9], "rep");
        rec.seed = parse_number<std::uint64_t>(f[10], "seed");
        rec.evaluations = parse_number<std::uint64_t>(f[11], "evaluations");
        const int succ = parse_number<int>(f[12], "success");
        if (succ != 0 && succ != 1) throw ValidationError("runs.csv: bad success flag");
        rec.success = succ == 1;

        if (rec.rep < 0 || rec.rep >= cfg.repetitions)
            throw ValidationError("runs.csv: repetition index out of range");
        if (rec.seed != derive_run_seed(cfg.seed, rec.point, rec.algo, rec.rep))
            throw ValidationError(
                "runs.csv: seed mismatch (different master seed or configuration); refusing "
                "to mix runs");
        rows.push_back(rec);
    }
    return rows;
}

std::string plot_data_from_summary_csv(const std::string& summary_text) {
    std::istringstream is(summary_text);
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("plot data: empty summary");
    const auto header = split_csv_line(line);
    auto column = [&](const char* name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw ValidationError(std::string("plot data: summary lacks column '") + name + "'");
    };
    const std::size_t col_k = column("k");
    const std::size_t col_label = column("label");
    const std::size_t col_mean = column("mean");

    std::vector<std::string> labels;  // first-appearance order
    std::map<std::string, std::map<int, std::string>> cells;
    std::vector<int> ks;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != header.size())
            throw ValidationError("plot data: malformed summary row '" + line + "'");
        if (f[col_k].empty())
            throw ValidationError("plot data: summaries carry no k sweep axis");
        const int k = parse_number<int>(f[col_k], "k");
        const std::string& label = f[col_label];
        if (!cells.count(label)) labels.push_back(label);
        if (!cells[label].emplace(k, f[col_mean]).second)
            throw ValidationError("plot data: duplicate cell for '" + label + "' at k=" +
                                  std::to_string(k));
        if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    }
    if (labels.empty()) throw ValidationError("plot data: no summary rows");
    std::sort(ks.begin(), ks.end());
    for (const auto& label : labels)
        for (const int k : ks)
            if (!cells[label].count(k))
                throw ValidationError("plot data: missing cell for '" + label + "' at k=" +
                                      std::to_string(k));

    std::ostringstream os;
    os << "k";
    for (const auto& label : labels) os << '\t' << label;
    os << '\n';
    for (const int k : ks) {
        os << k;
        for (const auto& label : labels) {
            const std::string& mean = cells[label][k];
            os << '\t' << (mean.empty() ? "nan" : mean);
        }
        os << '\n';
    }
    return os.str();
}

std::string plot_data(const ExperimentConfig& cfg,
                      const std::vector<SummaryRecord>& summaries) {
    return plot_data_from_summary_csv(summary_csv(cfg, summaries));
}

ExperimentResult run_experiment_to_dir(const ExperimentConfig& cfg, const std::string& out_dir,
                                       bool resume, ProgressFn progress) {
    cfg.validate();
    const fs::path dir(out_dir);
    const fs::path config_path = dir / "config.json";
    const fs::path runs_path = dir / "runs.csv";
    const fs::path summary_path = dir / "summary.csv";

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "'");

    const bool have_artifacts =
        fs::exists(config_path) || fs::exists(runs_path) || fs::exists(summary_path);
    if (have_artifacts && !resume)
        throw ValidationError("output directory '" + out_dir +
                              "' already holds an experiment; use --resume or a fresh directory");

    std::vector<RunRecord> existing;
    if (resume && have_artifacts) {
        if (!fs::exists(config_path))
            throw ValidationError("cannot resume: '" + config_path.string() + "' is missing");
        const ExperimentConfig stored = ExperimentConfig::load(config_path.string());
        if (stored.identity_json_text() != cfg.identity_json_text())
            throw ValidationError(
                "cannot resume: existing experiment was produced by a different configuration");
        if (fs::exists(runs_path)) {
            std::ifstream in(runs_path);
            if (!in) throw IoError("cannot read '" + runs_path.string() + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            existing = parse_runs_csv(cfg, buf.str());
        }
    }

    const int P = cfg.points();
    const int A = static_cast<int>(cfg.algorithms.size());
    const int reps = cfg.repetitions;
    const std::uint64_t total =
        static_cast<std::uint64_t>(P) * static_cast<std::uint64_t>(A) *
        static_cast<std::uint64_t>(reps);

    ExperimentResult result;

    auto flat = [&](const RunRecord& r) {
        return (static_cast<std::uint64_t>(r.point) * A + static_cast<std::uint64_t>(r.algo)) *
                   reps +
               static_cast<std::uint64_t>(r.rep);
    };

    if (existing.empty()) {
        result = run_experiment(cfg, std::move(progress));
    } else {
        std::vector<char> present(static_cast<std::size_t>(total), 0);
        result.runs.resize(static_cast<std::size_t>(total));
        for (const auto& rec : existing) {
            const auto t = flat(rec);
            if (present[static_cast<std::size_t>(t)])
                throw ValidationError("runs.csv: duplicate row for one run");
            present[static_cast<std::size_t>(t)] = 1;
            result.runs[static_cast<std::size_t>(t)] = rec;
        }

        std::vector<std::unique_ptr<FitnessFunction>> fns;
        for (int p = 0; p < P; ++p) fns.push_back(cfg.make_function(p));

        std::vector<std::uint64_t> missing;
        for (std::uint64_t t = 0; t < total; ++t)
            if (!present[static_cast<std::size_t>(t)]) missing.push_back(t);

        unsigned hw = std::thread::hardware_concurrency();
        const unsigned T = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                           : (hw > 0 ? hw : 1);
        std::mutex progress_mutex;
        std::uint64_t done = 0;
        auto worker = [&](unsigned w) {
            for (std::size_t i = w; i < missing.size(); i += T) {
                const std::uint64_t t = missing[i];
                const int point = static_cast<int>(t / (static_cast<std::uint64_t>(A) * reps));
                const std::uint64_t rest = t % (static_cast<std::uint64_t>(A) * reps);
                const int algo = static_cast<int>(rest / reps);
                const int rep = static_cast<int>(rest % reps);
                RunRecord rec;
                rec.point = point;
                rec.algo = algo;
                rec.rep = rep;
                rec.seed = derive_run_seed(cfg.seed, point, algo, rep);
                const RunOutcome out =
                    run_optimizer(cfg.algorithms[static_cast<std::size_t>(algo)],
                                  *fns[static_cast<std::size_t>(point)], cfg.budget, rec.seed);
                rec.evaluations = out.evaluations;
                rec.success = out.success;
                result.runs[static_cast<std::size_t>(t)] = rec;
                if (progress) {
                    std::lock_guard<std::mutex> lock(progress_mutex);
                    progress(++done, missing.size());
                }
            }
        };
        if (T <= 1 || missing.size() <= 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < T; ++w) pool.emplace_back(worker, w);
            for (auto& th : pool) th.join();
        }
        result.summaries = summarize(cfg, result.runs);
    }

    cfg.save(config_path.string());
    {
        std::ofstream out(runs_path);
        if (!out) throw IoError("cannot write '" + runs_path.string() + "'");
        out << runs_csv(cfg, result.runs);
        if (!out) throw IoError("failed writing '" + runs_path.string() + "'");
    }
    {
        std::ofstream out(summary_path);
        if (!out) throw IoError("cannot write '" + summary_path.string() + "'");
        out << summary_csv(cfg, result.summaries);
        if (!out) throw IoError("failed writing '" + summary_path.string() + "'");
    }
    return result;
}

}  // namespace sdfea
