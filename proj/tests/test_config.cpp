#include <doctest.h>

#include <string>

#include "sdfea/config.hpp"

using namespace sdfea;

TEST_CASE("the bundled preset has the documented shape") {
    const ExperimentConfig cfg = figure2_preset();
    CHECK(cfg.function == "jump");
    CHECK(cfg.n == 100);
    CHECK(cfg.delta == 4);
    REQUIRE(cfg.ks.size() == 10);
    CHECK(cfg.ks.front() == 4);
    CHECK(cfg.ks.back() == 13);
    REQUIRE(cfg.algorithms.size() == 7);  // three heavy-tailed SD variants + four baselines
    CHECK(cfg.repetitions == 200);
    CHECK(cfg.points() == 10);

    CHECK(cfg.algorithms[0].label() == "sd-fea_b1.25_g0.25_R25");
    CHECK(cfg.algorithms[1].label() == "sd-fea_b1.5_g0.25_R25");
    CHECK(cfg.algorithms[2].label() == "sd-fea_b2_g0.25_R25");
    CHECK(cfg.algorithms[3].label() == "oea");
    CHECK(cfg.algorithms[4].label() == "fea_b1.5");
    CHECK(cfg.algorithms[5].label() == "sd-oea_R10000");
    CHECK(cfg.algorithms[6].label() == "sd-rls-r_R10000");

    // 10 sweep points x 7 variants x 200 repetitions
    CHECK(static_cast<long long>(cfg.points()) * 7 * cfg.repetitions == 14000);
}

TEST_CASE("the preset round-trips through serialization unchanged") {
    const ExperimentConfig cfg = figure2_preset();
    const std::string text = cfg.to_json_text();
    const ExperimentConfig back = ExperimentConfig::from_json_text(text);
    CHECK(back.to_json_text() == text);
    CHECK(back.identity_json_text() == cfg.identity_json_text());
}

TEST_CASE("unknown keys are rejected with their path") {
    const std::string text = R"({
        "function": {"name": "onemax", "n": 20},
        "algorithms": [{"name": "rls"}],
        "bogus": 1
    })";
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json_text(text),
                         "unknown key 'bogus'", ConfigError);

    const std::string nested = R"({
        "function": {"name": "onemax", "n": 20},
        "algorithms": [{"name": "rls", "frobnicate": true}]
    })";
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json_text(nested),
                         "unknown key 'algorithms[0].frobnicate'", ConfigError);
}

TEST_CASE("an empty algorithm list fails validation") {
    const std::string text = R"({
        "function": {"name": "onemax", "n": 20},
        "algorithms": []
    })";
    CHECK_THROWS_AS(ExperimentConfig::from_json_text(text), ConfigError);
}

TEST_CASE("jump configs need k and delta, scalars allowed") {
    const std::string scalar_k = R"({
        "function": {"name": "jump", "n": 30, "delta": 2, "k": 3},
        "algorithms": [{"name": "rls"}]
    })";
    const ExperimentConfig cfg = ExperimentConfig::from_json_text(scalar_k);
    CHECK(cfg.points() == 1);
    CHECK(cfg.point_k(0) == 3);

    const std::string missing_delta = R"({
        "function": {"name": "jump", "n": 30, "k": 3},
        "algorithms": [{"name": "rls"}]
    })";
    CHECK_THROWS_AS(ExperimentConfig::from_json_text(missing_delta), ConfigError);

    const std::string duplicate_k = R"({
        "function": {"name": "jump", "n": 30, "delta": 2, "k": [3, 3]},
        "algorithms": [{"name": "rls"}]
    })";
    CHECK_THROWS_AS(ExperimentConfig::from_json_text(duplicate_k), ConfigError);

    const std::string k_on_onemax = R"({
        "function": {"name": "onemax", "n": 30, "k": 3},
        "algorithms": [{"name": "rls"}]
    })";
    CHECK_THROWS_AS(ExperimentConfig::from_json_text(k_on_onemax), ConfigError);
}

TEST_CASE("algorithm parameters are validated in context") {
    const std::string bad_gamma = R"({
        "function": {"name": "onemax", "n": 20},
        "algorithms": [{"name": "sd-fea", "gamma": 1.0}]
    })";
    CHECK_THROWS_AS(ExperimentConfig::from_json_text(bad_gamma), ConfigError);

    const std::string rls_with_beta = R"({
        "function": {"name": "onemax", "n": 20},
        "algorithms": [{"name": "rls", "beta": 1.5}]
    })";
    CHECK_THROWS_AS(ExperimentConfig::from_json_text(rls_with_beta), ConfigError);

    const std::string duplicate_variant = R"({
        "function": {"name": "onemax", "n": 20},
        "algorithms": [{"name": "rls"}, {"name": "rls"}]
    })";
    CHECK_THROWS_AS(ExperimentConfig::from_json_text(duplicate_variant), ConfigError);
}

TEST_CASE("defaults are filled in") {
    const std::string text = R"({
        "function": {"name": "onemax", "n": 20},
        "algorithms": [{"name": "sd-fea"}]
    })";
    const ExperimentConfig cfg = ExperimentConfig::from_json_text(text);
    CHECK(cfg.repetitions == 200);
    CHECK(cfg.seed == 1);
    CHECK(cfg.budget == 1'000'000'000ULL);
    CHECK(cfg.threads == 0);
    CHECK(cfg.algorithms[0].label() == "sd-fea_b1.5_g0.25_R25");
}
