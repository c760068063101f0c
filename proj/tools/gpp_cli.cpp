// Command-line front end; talks to the solver library exclusively through
// the C API so the shared library surface stays exercised.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpp.h"

namespace {

int finish(gpp_status status) {
    if (status == GPP_OK)
        return 0;
    std::fprintf(stderr, "%s\n", gpp_last_error());
    return static_cast<int>(status);
}

void print_or_write(const char* text, const std::string& out_path) {
    if (out_path.empty()) {
        std::printf("%s\n", text);
        return;
    }
    std::FILE* f = std::fopen(out_path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "{\"error\":\"internal\",\"message\":\"cannot write %s\"}\n",
                     out_path.c_str());
        std::exit(5);
    }
    std::fputs(text, f);
    std::fputc('\n', f);
    std::fclose(f);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for pattern-based potentials on chains"};
    app.require_subcommand(1);

    // closure
    std::string closure_language;
    bool closure_star = false;
    bool closure_hasse = false;
    bool closure_export = false;
    auto* closure = app.add_subcommand("closure", "closure sizes and the Hasse edge bound");
    closure->add_option("--language", closure_language, "language JSON file")->required();
    closure->add_flag("--star", closure_star, "also report the full closure size");
    closure->add_flag("--hasse", closure_hasse, "also report the Hasse edge count");
    closure->add_flag("--export-hasse", closure_export, "print the diagram instead of the report");

    // solve
    std::string solve_instance;
    std::string solve_mode = "min";
    std::string solve_semiring;
    std::string solve_algorithm = "auto";
    bool solve_argmin = false;
    bool solve_exact = false;
    auto* solve = app.add_subcommand("solve", "run the closure-based solver");
    solve->add_option("--instance", solve_instance, "instance JSON file")->required();
    solve->add_option("--mode", solve_mode, "min or partition")
        ->check(CLI::IsMember({"min", "partition"}));
    solve->add_option("--semiring", solve_semiring, "minplus, sumprod or logsumexp")
        ->check(CLI::IsMember({"minplus", "sumprod", "logsumexp"}));
    solve->add_option("--algorithm", solve_algorithm, "auto, neg-dp or semiring")
        ->check(CLI::IsMember({"auto", "neg-dp", "semiring"}));
    solve->add_flag("--argmin", solve_argmin, "also report a minimizing word");
    solve->add_flag("--exact", solve_exact, "exact rational arithmetic (mode min)");

    // oracle
    std::string oracle_instance;
    std::string oracle_mode = "min";
    std::string oracle_semiring;
    std::string oracle_method = "brute";
    long long oracle_max_words = 0;
    auto* oracle = app.add_subcommand("oracle", "reference computation by enumeration");
    oracle->add_option("--instance", oracle_instance, "instance JSON file")->required();
    oracle->add_option("--mode", oracle_mode, "min or partition")
        ->check(CLI::IsMember({"min", "partition"}));
    oracle->add_option("--semiring", oracle_semiring, "minplus, sumprod or logsumexp")
        ->check(CLI::IsMember({"minplus", "sumprod", "logsumexp"}));
    oracle->add_option("--method", oracle_method, "brute or windowed")
        ->check(CLI::IsMember({"brute", "windowed"}));
    oracle->add_option("--max-words", oracle_max_words, "enumeration cap");

    // bench
    std::string bench_language;
    std::string bench_semiring = "minplus";
    std::vector<long long> bench_n;
    auto* bench = app.add_subcommand("bench", "operation-count scaling over n");
    bench->add_option("--language", bench_language, "language JSON file")->required();
    bench->add_option("--n", bench_n, "chain lengths")->required()->expected(-1);
    bench->add_option("--semiring", bench_semiring, "minplus, sumprod or logsumexp")
        ->check(CLI::IsMember({"minplus", "sumprod", "logsumexp"}));

    // gen
    std::string gen_example;
    std::string gen_params = "{}";
    std::string gen_out_language;
    std::string gen_out_instance;
    long long gen_seed = -1;
    int gen_domain_size = -1;
    long long gen_n = -1;
    std::string gen_weights;
    auto* gen = app.add_subcommand("gen", "example and test languages");
    gen->add_option("--example", gen_example, "ex1, roots, products, multiscale or waves")
        ->required()
        ->check(CLI::IsMember({"ex1", "roots", "products", "multiscale", "waves"}));
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--domain-size", gen_domain_size, "domain size");
    gen->add_option("--n", gen_n, "also emit an instance of this chain length");
    gen->add_option("--weights", gen_weights, "instance weight signs")
        ->check(CLI::IsMember({"nonpositive", "mixed"}));
    gen->add_option("--params", gen_params, "JSON object of further generator settings");
    gen->add_option("--out-language", gen_out_language, "write the language here");
    gen->add_option("--out-instance", gen_out_instance, "write the instance here");

    CLI11_PARSE(app, argc, argv);

    if (closure->parsed()) {
        gpp_language* lang = nullptr;
        if (gpp_status s = gpp_language_from_file(closure_language.c_str(), &lang); s != GPP_OK)
            return finish(s);
        char* report = nullptr;
        const gpp_status s =
            closure_export
                ? gpp_hasse_export(lang, closure_star ? 1 : 0, &report)
                : gpp_closure_report(lang, closure_star ? 1 : 0, closure_hasse ? 1 : 0, &report);
        if (s == GPP_OK) {
            std::printf("%s\n", report);
            gpp_string_free(report);
        }
        gpp_language_free(lang);
        return finish(s);
    }

    if (solve->parsed()) {
        gpp_instance* inst = nullptr;
        if (gpp_status s = gpp_instance_from_file(solve_instance.c_str(), &inst); s != GPP_OK)
            return finish(s);
        char* result = nullptr;
        const gpp_status s =
            gpp_solve(inst, solve_mode.c_str(), solve_semiring.c_str(), solve_algorithm.c_str(),
                      solve_argmin ? 1 : 0, solve_exact ? 1 : 0, &result);
        if (s == GPP_OK) {
            std::printf("%s\n", result);
            gpp_string_free(result);
        }
        gpp_instance_free(inst);
        return finish(s);
    }

    if (oracle->parsed()) {
        gpp_instance* inst = nullptr;
        if (gpp_status s = gpp_instance_from_file(oracle_instance.c_str(), &inst); s != GPP_OK)
            return finish(s);
        char* result = nullptr;
        const gpp_status s = gpp_oracle(inst, oracle_mode.c_str(), oracle_semiring.c_str(),
                                        oracle_method.c_str(), oracle_max_words, &result);
        if (s == GPP_OK) {
            std::printf("%s\n", result);
            gpp_string_free(result);
        }
        gpp_instance_free(inst);
        return finish(s);
    }

    if (bench->parsed()) {
        gpp_language* lang = nullptr;
        if (gpp_status s = gpp_language_from_file(bench_language.c_str(), &lang); s != GPP_OK)
            return finish(s);
        char* result = nullptr;
        const gpp_status s = gpp_bench(lang, bench_n.data(), static_cast<int>(bench_n.size()),
                                       bench_semiring.c_str(), &result);
        if (s == GPP_OK) {
            std::printf("%s\n", result);
            gpp_string_free(result);
        }
        gpp_language_free(lang);
        return finish(s);
    }

    // gen: fold the dedicated flags into the params object
    nlohmann::json params = nlohmann::json::parse(gen_params, nullptr, false);
    if (params.is_discarded() || !params.is_object()) {
        std::fprintf(stderr,
                     "{\"error\":\"validation\",\"message\":\"--params must be a JSON object\"}\n");
        return 2;
    }
    if (gen_seed >= 0)
        params["seed"] = gen_seed;
    if (gen_domain_size >= 0)
        params["domain_size"] = gen_domain_size;
    if (gen_n >= 0)
        params["n"] = gen_n;
    if (!gen_weights.empty())
        params["weights"] = gen_weights;

    char* language_json = nullptr;
    char* instance_json = nullptr;
    const gpp_status s =
        gpp_generate(gen_example.c_str(), params.dump().c_str(), &language_json, &instance_json);
    if (s == GPP_OK) {
        print_or_write(language_json, gen_out_language);
        gpp_string_free(language_json);
        if (instance_json) {
            print_or_write(instance_json, gen_out_instance);
            gpp_string_free(instance_json);
        }
    }
    return finish(s);
}
