#include "sdfea/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sdfea {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& path,
                const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key))
            throw ConfigError("unknown key '" + path + key + "'");
    }
}

template <class T>
T get_field(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) throw ConfigError("missing key '" + path + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("invalid value for '" + path + key + "'");
    }
}

template <class T>
T get_field_or(const json& obj, const std::string& path, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("invalid value for '" + path + key + "'");
    }
}

json algorithm_to_json(const AlgorithmSpec& a) {
    json j;
    j["name"] = a.name;
    if (a.beta) j["beta"] = *a.beta;
    if (a.gamma) j["gamma"] = *a.gamma;
    if (a.R) j["R"] = *a.R;
    if (a.rate_cap) j["rate_cap"] = *a.rate_cap;
    return j;
}

AlgorithmSpec algorithm_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError("'" + path + "' must be an object");
    check_keys(j, path + ".", {"name", "beta", "gamma", "R", "rate_cap"});
    AlgorithmSpec a;
    a.name = get_field<std::string>(j, path + ".", "name");
    if (j.contains("beta")) a.beta = get_field<double>(j, path + ".", "beta");
    if (j.contains("gamma")) a.gamma = get_field<double>(j, path + ".", "gamma");
    if (j.contains("R")) a.R = get_field<double>(j, path + ".", "R");
    if (j.contains("rate_cap")) a.rate_cap = get_field<int>(j, path + ".", "rate_cap");
    return a;
}

json config_to_json(const ExperimentConfig& c, bool identity_only) {
    json f;
    f["name"] = c.function;
    f["n"] = c.n;
    if (c.function == "jump") {
        f["delta"] = c.delta;
        f["k"] = c.ks;
    }
    json j;
    j["function"] = f;
    j["algorithms"] = json::array();
    for (const auto& a : c.algorithms) j["algorithms"].push_back(algorithm_to_json(a));
    j["repetitions"] = c.repetitions;
    j["seed"] = c.seed;
    j["budget"] = c.budget;
    if (!identity_only) {
        j["threads"] = c.threads;
        if (!c.output.empty()) j["output"] = c.output;
    }
    return j;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (n < 1) throw ConfigError("'function.n' must be >= 1");
    if (algorithms.empty()) throw ConfigError("'algorithms' must not be empty");
    if (repetitions < 1) throw ConfigError("'repetitions' must be >= 1");
    if (budget < 1) throw ConfigError("'budget' must be >= 1");
    if (threads < 0) throw ConfigError("'threads' must be >= 0");

    if (function == "jump") {
        if (ks.empty()) throw ConfigError("'function.k' must list at least one value");
        std::set<int> seen;
        for (const int k : ks) {
            if (!seen.insert(k).second)
                throw ConfigError("'function.k' contains duplicate value " + std::to_string(k));
        }
    }
    // Constructing every sweep point validates the parameter ranges.
    for (int p = 0; p < points(); ++p) {
        try {
            (void)make_function(p);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("'function': ") + e.what());
        }
    }
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        try {
            algorithms[i].validate(n);
        } catch (const std::exception& e) {
            throw ConfigError("'algorithms[" + std::to_string(i) + "]': " + e.what());
        }
    }
    std::set<std::string> labels;
    for (const auto& a : algorithms) {
        if (!labels.insert(a.label()).second)
            throw ConfigError("'algorithms' contains duplicate variant '" + a.label() + "'");
    }
}

std::unique_ptr<FitnessFunction> ExperimentConfig::make_function(int point) const {
    std::map<std::string, int> params;
    if (function == "jump") {
        params["k"] = ks.at(static_cast<std::size_t>(point));
        params["delta"] = delta;
    }
    return make_fitness(function, n, params);
}

std::string ExperimentConfig::to_json_text() const {
    return config_to_json(*this, false).dump(2) + "\n";
}

std::string ExperimentConfig::identity_json_text() const {
    return config_to_json(*this, true).dump(2) + "\n";
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be an object");
    check_keys(j, "", {"function", "algorithms", "repetitions", "seed", "budget",
                       "threads", "output"});

    ExperimentConfig c;
    if (!j.contains("function")) throw ConfigError("missing key 'function'");
    const json& f = j.at("function");
    if (!f.is_object()) throw ConfigError("'function' must be an object");
    c.function = get_field<std::string>(f, "function.", "name");
    c.n = get_field<int>(f, "function.", "n");
    if (c.function == "jump") {
        check_keys(f, "function.", {"name", "n", "delta", "k"});
        c.delta = get_field<int>(f, "function.", "delta");
        if (!f.contains("k")) throw ConfigError("missing key 'function.k'");
        const json& k = f.at("k");
        if (k.is_array()) {
            for (const auto& v : k) {
                if (!v.is_number_integer())
                    throw ConfigError("'function.k' must hold integers");
                c.ks.push_back(v.get<int>());
            }
        } else if (k.is_number_integer()) {
            c.ks.push_back(k.get<int>());
        } else {
            throw ConfigError("'function.k' must be an integer or an array");
        }
    } else {
        check_keys(f, "function.", {"name", "n"});
    }

    if (!j.contains("algorithms")) throw ConfigError("missing key 'algorithms'");
    const json& algs = j.at("algorithms");
    if (!algs.is_array()) throw ConfigError("'algorithms' must be an array");
    for (std::size_t i = 0; i < algs.size(); ++i)
        c.algorithms.push_back(
            algorithm_from_json(algs[i], "algorithms[" + std::to_string(i) + "]"));

    c.repetitions = get_field_or<int>(j, "", "repetitions", 200);
    c.seed = get_field_or<std::uint64_t>(j, "", "seed", 1);
    c.budget = get_field_or<std::uint64_t>(j, "", "budget", 1'000'000'000ULL);
    c.threads = get_field_or<int>(j, "", "threads", 0);
    c.output = get_field_or<std::string>(j, "", "output", "");

    c.validate();
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

void ExperimentConfig::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write config file '" + path + "'");
    out << to_json_text();
    if (!out) throw IoError("failed writing config file '" + path + "'");
}

ExperimentConfig figure2_preset() {
    ExperimentConfig c;
    c.function = "jump";
    c.n = 100;
    c.delta = 4;
    for (int k = 4; k <= 13; ++k) c.ks.push_back(k);
    for (const double beta : {1.25, 1.5, 2.0}) {
        AlgorithmSpec a;
        a.name = "sd-fea";
        a.beta = beta;
        a.gamma = 0.25;
        a.R = 25.0;
        c.algorithms.push_back(a);
    }
    {
        AlgorithmSpec a;
        a.name = "oea";
        c.algorithms.push_back(a);
    }
    {
        AlgorithmSpec a;
        a.name = "fea";
        a.beta = 1.5;
        c.algorithms.push_back(a);
    }
    {
        AlgorithmSpec a;
        a.name = "sd-oea";
        a.R = 100.0 * 100.0;
        c.algorithms.push_back(a);
    }
    {
        AlgorithmSpec a;
        a.name = "sd-rls-r";
        a.R = 100.0 * 100.0;
        c.algorithms.push_back(a);
    }
    c.repetitions = 200;
    c.seed = 1;
    c.budget = 1'000'000'000ULL;
    c.threads = 0;
    c.validate();
    return c;
}

}  // namespace sdfea
