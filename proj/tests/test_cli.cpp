#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <regex>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(GPP_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    std::FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), pipe))
        result.output += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data_file(const std::string& name) {
    return (std::filesystem::path(GPP_TEST_DATA_DIR) / name).string();
}

std::string strip_wall_ms(std::string text) {
    static const std::regex wall("\"wall_ms\":[^}]*");
    return std::regex_replace(text, wall, "\"wall_ms\":0");
}

} // namespace

TEST_CASE("closure report on the chain language") {
    const RunResult run = run_cli("closure --language " + data_file("chain_language.json") +
                                  " --star --hasse");
    REQUIRE(run.exit_code == 0);
    const json report = json::parse(run.output);
    CHECK(report["size"] == 3);
    CHECK(report["reported_size"] == 2);
    CHECK(report["star_size"] == 5);
    CHECK(report["hasse_edges"] == 2);
    CHECK(report["bound_satisfied"] == true);
}

TEST_CASE("generated example feeds back into closure") {
    const auto dir = std::filesystem::temp_directory_path() / "gpp_cli_test";
    std::filesystem::create_directories(dir);
    const std::string lang_path = (dir / "ex1.json").string();

    const RunResult gen = run_cli("gen --example ex1 --domain-size 4 --out-language " +
                                  lang_path);
    REQUIRE(gen.exit_code == 0);

    const RunResult closure = run_cli("closure --language " + lang_path);
    REQUIRE(closure.exit_code == 0);
    const json report = json::parse(closure.output);
    CHECK(report["reported_size"] == 12);
    CHECK(report["includes_bottom"] == true);
    CHECK(report["bound_satisfied"] == true);
}

TEST_CASE("generated instances solve end to end") {
    const auto dir = std::filesystem::temp_directory_path() / "gpp_cli_test";
    std::filesystem::create_directories(dir);
    const std::string lang_path = (dir / "roots.json").string();
    const std::string inst_path = (dir / "roots_instance.json").string();

    const RunResult gen = run_cli("gen --example roots --seed 5 --n 8 --weights mixed"
                                  " --out-language " +
                                  lang_path + " --out-instance " + inst_path);
    REQUIRE(gen.exit_code == 0);

    const RunResult solve = run_cli("solve --instance " + inst_path + " --mode min --argmin");
    REQUIRE(solve.exit_code == 0);
    const json result = json::parse(solve.output);

    const RunResult oracle = run_cli("oracle --instance " + inst_path + " --mode min");
    REQUIRE(oracle.exit_code == 0);
    CHECK(result["value"] == json::parse(oracle.output)["value"]);

    // seeded generation is reproducible
    const RunResult again = run_cli("gen --example roots --seed 5 --n 8 --weights mixed");
    REQUIRE(again.exit_code == 0);
    const RunResult also = run_cli("gen --example roots --seed 5 --n 8 --weights mixed");
    REQUIRE(also.exit_code == 0);
    CHECK(again.output == also.output);
}

TEST_CASE("solve prints the result record") {
    const RunResult min = run_cli("solve --instance " + data_file("chain_instance.json") +
                                  " --mode min");
    REQUIRE(min.exit_code == 0);
    const json value = json::parse(min.output);
    CHECK(value["value"] == -2.0);

    const RunResult argmin = run_cli("solve --instance " + data_file("chain_instance.json") +
                                     " --mode min --argmin");
    REQUIRE(argmin.exit_code == 0);
    const json with_argmin = json::parse(argmin.output);
    CHECK(with_argmin["argmin"] == json::array({1, 1, 1}));

    const RunResult exact = run_cli("solve --instance " + data_file("chain_instance.json") +
                                    " --mode min --exact");
    REQUIRE(exact.exit_code == 0);
    CHECK(json::parse(exact.output)["value"] == -2.0);
}

TEST_CASE("solve agrees with both oracle methods") {
    for (const std::string mode : {"min", "partition"}) {
        const RunResult solve = run_cli("solve --instance " + data_file("mixed_instance.json") +
                                        " --mode " + mode);
        REQUIRE(solve.exit_code == 0);
        const double solved = json::parse(solve.output)["value"].get<double>();

        for (const std::string method : {"brute", "windowed"}) {
            const RunResult oracle = run_cli("oracle --instance " +
                                             data_file("mixed_instance.json") + " --mode " + mode +
                                             " --method " + method);
            REQUIRE(oracle.exit_code == 0);
            const double reference = json::parse(oracle.output)["value"].get<double>();
            CHECK(solved == doctest::Approx(reference).epsilon(1e-12));
        }
    }
}

TEST_CASE("identical runs emit identical bytes apart from timing") {
    const std::string command =
        "solve --instance " + data_file("mixed_instance.json") + " --mode partition";
    const RunResult first = run_cli(command);
    const RunResult second = run_cli(command);
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    CHECK(strip_wall_ms(first.output) == strip_wall_ms(second.output));
}

TEST_CASE("exit codes") {
    // unreadable input
    CHECK(run_cli("closure --language /nonexistent.json").exit_code == 2);

    // malformed content
    const auto dir = std::filesystem::temp_directory_path() / "gpp_cli_test";
    std::filesystem::create_directories(dir);
    const std::string bad = (dir / "bad.json").string();
    std::FILE* f = std::fopen(bad.c_str(), "wb");
    std::fputs("{\"domain\":{}}", f);
    std::fclose(f);
    const RunResult malformed = run_cli("closure --language " + bad);
    CHECK(malformed.exit_code == 2);
    CHECK(malformed.output.find("\"error\":\"validation\"") != std::string::npos);

    // forcing neg-dp onto positive weights
    const RunResult mode = run_cli("solve --instance " + data_file("mixed_instance.json") +
                                   " --mode min --algorithm neg-dp");
    CHECK(mode.exit_code == 4);
    CHECK(mode.output.find("\"error\":\"mode\"") != std::string::npos);
}

TEST_CASE("closure cap environment override") {
    const std::string command = "GPP_CLOSURE_CAP=2 " + std::string(GPP_CLI_PATH) +
                                " closure --language " + data_file("chain_language.json") +
                                " 2>&1";
    RunResult result;
    std::FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), pipe))
        result.output += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    CHECK(result.exit_code == 3);
    CHECK(result.output.find("\"error\":\"capacity\"") != std::string::npos);
}

TEST_CASE("bench prints points and ratios") {
    const RunResult bench = run_cli("bench --language " + data_file("chain_language.json") +
                                    " --n 64 128");
    REQUIRE(bench.exit_code == 0);
    const json report = json::parse(bench.output);
    REQUIRE(report["ratios"].size() == 1);
    const double ratio = report["ratios"][0].get<double>();
    CHECK(ratio > 1.9);
    CHECK(ratio < 2.1);
}
