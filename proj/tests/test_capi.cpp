#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "gpp.h"

using nlohmann::json;

namespace {

constexpr const char* kChainLanguage =
    R"({"domain":{"size":2},"kind":"simple","predicates":[{"id":"p0","factors":[[1],[1]]}]})";

constexpr const char* kChainInstance = R"({
  "language": {"domain":{"size":2},"kind":"simple",
               "predicates":[{"id":"p0","factors":[[1],[1]]}]},
  "n": 3,
  "constraints": [{"pred":"p0","pos":1,"weight":-1},
                  {"pred":"p0","pos":2,"weight":-1}]})";

struct LanguageHandle {
    gpp_language* value = nullptr;
    ~LanguageHandle() { gpp_language_free(value); }
};

struct InstanceHandle {
    gpp_instance* value = nullptr;
    ~InstanceHandle() { gpp_instance_free(value); }
};

json take_json(char* text) {
    REQUIRE(text != nullptr);
    json parsed = json::parse(std::string(text));
    gpp_string_free(text);
    return parsed;
}

} // namespace

TEST_CASE("language parse and closure report") {
    LanguageHandle lang;
    REQUIRE(gpp_language_parse(kChainLanguage, &lang.value) == GPP_OK);

    char* out = nullptr;
    REQUIRE(gpp_closure_report(lang.value, 1, 1, &out) == GPP_OK);
    const json report = take_json(out);
    CHECK(report["kind"] == "cap_bar");
    CHECK(report["size"] == 3);
    CHECK(report["reported_size"] == 2);
    CHECK(report["includes_epsilon"] == true);
    CHECK(report["includes_bottom"] == false);
    CHECK(report["star_size"] == 5);
    CHECK(report["hasse_edges"] == 2);
    CHECK(report["bound"] == 8);
    CHECK(report["bound_satisfied"] == true);
}

TEST_CASE("parse errors carry diagnostics and status 2") {
    gpp_language* lang = nullptr;
    CHECK(gpp_language_parse("{\"kind\":42}", &lang) == GPP_ERR_VALIDATION);
    const json diag = json::parse(std::string(gpp_last_error()));
    CHECK(diag["error"] == "validation");
    CHECK(diag.contains("message"));
}

TEST_CASE("solve routes by mode and weights") {
    InstanceHandle inst;
    REQUIRE(gpp_instance_parse(kChainInstance, &inst.value) == GPP_OK);

    char* out = nullptr;
    REQUIRE(gpp_solve(inst.value, "min", "", "auto", 0, 0, &out) == GPP_OK);
    json result = take_json(out);
    CHECK(result["value"] == -2.0);
    // routed to the non-positive recursion: no star closure built
    CHECK(result["stats"]["star_size"] == 0);
    CHECK(result["stats"]["closure_size"] == 3);

    REQUIRE(gpp_solve(inst.value, "min", "", "auto", 1, 0, &out) == GPP_OK);
    result = take_json(out);
    CHECK(result["value"] == -2.0);
    CHECK(result["argmin"] == json::array({1, 1, 1}));
    CHECK(result["stats"]["star_size"] == 5);

    REQUIRE(gpp_solve(inst.value, "partition", "sumprod", "auto", 0, 0, &out) == GPP_OK);
    result = take_json(out);
    const double z = result["value"].get<double>();
    // over the 8 words: 111 has two matches, 112 and 211 one each
    const double expected = std::exp(2.0) + 2 * std::exp(1.0) + 5.0;
    CHECK(z == doctest::Approx(expected).epsilon(1e-12));

    REQUIRE(gpp_solve(inst.value, "min", "", "auto", 0, 1, &out) == GPP_OK);
    result = take_json(out);
    CHECK(result["value"] == -2.0);
}

TEST_CASE("forcing the non-positive path on positive weights is a mode error") {
    InstanceHandle inst;
    const std::string positive = R"({
        "language": {"domain":{"size":2},"kind":"simple",
                     "predicates":[{"id":"p0","factors":[[1],[1]]}]},
        "n": 3,
        "constraints": [{"pred":"p0","pos":1,"weight":0.5}]})";
    REQUIRE(gpp_instance_parse(positive.c_str(), &inst.value) == GPP_OK);

    char* out = nullptr;
    CHECK(gpp_solve(inst.value, "min", "", "neg-dp", 0, 0, &out) == GPP_ERR_MODE);
    const json diag = json::parse(std::string(gpp_last_error()));
    CHECK(diag["error"] == "mode");

    // auto mode falls back to the semiring path
    REQUIRE(gpp_solve(inst.value, "min", "", "auto", 0, 0, &out) == GPP_OK);
    const json result = take_json(out);
    CHECK(result["value"] == 0.0);
}

TEST_CASE("oracle mirrors solve") {
    InstanceHandle inst;
    REQUIRE(gpp_instance_parse(kChainInstance, &inst.value) == GPP_OK);

    char* out = nullptr;
    REQUIRE(gpp_oracle(inst.value, "min", "", "brute", 0, &out) == GPP_OK);
    json result = take_json(out);
    CHECK(result["value"] == -2.0);
    CHECK(result["argmin"] == json::array({1, 1, 1}));

    REQUIRE(gpp_oracle(inst.value, "min", "", "windowed", 0, &out) == GPP_OK);
    result = take_json(out);
    CHECK(result["value"] == -2.0);

    // the cap triggers capacity errors
    CHECK(gpp_oracle(inst.value, "min", "", "brute", 4, &out) == GPP_ERR_CAPACITY);
}

TEST_CASE("bench reports linear scaling") {
    LanguageHandle lang;
    REQUIRE(gpp_language_parse(kChainLanguage, &lang.value) == GPP_OK);
    const long long lengths[] = {64, 128};
    char* out = nullptr;
    REQUIRE(gpp_bench(lang.value, lengths, 2, "minplus", &out) == GPP_OK);
    const json report = take_json(out);
    CHECK(report["semiring"] == "minplus");
    REQUIRE(report["points"].size() == 2);
    CHECK(report["points"][0]["n"] == 64);
    REQUIRE(report["ratios"].size() == 1);
    const double ratio = report["ratios"][0].get<double>();
    CHECK(ratio > 1.9);
    CHECK(ratio < 2.1);
}

TEST_CASE("generate emits languages and instances") {
    char* language_json = nullptr;
    char* instance_json = nullptr;
    REQUIRE(gpp_generate("ex1", R"({"domain_size":4,"n":6,"weights":"nonpositive","seed":3})",
                         &language_json, &instance_json) == GPP_OK);
    const json lang = take_json(language_json);
    CHECK(lang["domain"]["size"] == 4);
    CHECK(lang["predicates"].size() == 1);
    REQUIRE(instance_json != nullptr);
    const json inst = take_json(instance_json);
    CHECK(inst["n"] == 6);

    CHECK(gpp_generate("nope", "{}", &language_json, &instance_json) == GPP_ERR_VALIDATION);
}

TEST_CASE("energy evaluation through the C surface") {
    InstanceHandle inst;
    REQUIRE(gpp_instance_parse(kChainInstance, &inst.value) == GPP_OK);
    const int word[] = {1, 1, 1};
    double energy = 0.0;
    REQUIRE(gpp_evaluate_energy(inst.value, word, 3, &energy) == GPP_OK);
    CHECK(energy == -2.0);

    const int bad[] = {1, 1, 9};
    CHECK(gpp_evaluate_energy(inst.value, bad, 3, &energy) == GPP_ERR_VALIDATION);
}
