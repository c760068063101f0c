#include "gpp.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gpp/closure.hpp"
#include "gpp/errors.hpp"
#include "gpp/generators.hpp"
#include "gpp/model.hpp"
#include "gpp/oracle.hpp"
#include "gpp/order.hpp"
#include "gpp/solver.hpp"

using nlohmann::json;

struct gpp_language {
    gpp::Language value;
};
struct gpp_instance {
    gpp::Instance value;
};

namespace {

thread_local std::string g_last_error;

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += ' ';
            break;
        default:
            out += c;
        }
    }
    return out;
}

void set_error(const char* kind, const std::string& message, const std::string& path = {}) {
    std::ostringstream out;
    out << "{\"error\":\"" << kind << "\",\"message\":\"" << escape(message) << '"';
    if (!path.empty())
        out << ",\"path\":\"" << escape(path) << '"';
    out << '}';
    g_last_error = out.str();
}

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <class F>
gpp_status guarded(F&& body) {
    try {
        body();
        return GPP_OK;
    } catch (const gpp::ValidationError& e) {
        set_error("validation", e.what(), e.path());
        return GPP_ERR_VALIDATION;
    } catch (const gpp::CapacityError& e) {
        set_error("capacity", e.what());
        return GPP_ERR_CAPACITY;
    } catch (const gpp::ModeError& e) {
        set_error("mode", e.what());
        return GPP_ERR_MODE;
    } catch (const std::exception& e) {
        set_error("internal", e.what());
        return GPP_ERR_INTERNAL;
    }
}

gpp::ClosureOptions closure_options() {
    gpp::ClosureOptions options;
    if (const char* cap = std::getenv("GPP_CLOSURE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(cap, &end, 10);
        if (end && *end == '\0' && v > 0)
            options.member_cap = static_cast<std::size_t>(v);
    }
    return options;
}

} // namespace

extern "C" {

const char* gpp_last_error(void) { return g_last_error.c_str(); }

void gpp_string_free(char* text) { std::free(text); }

gpp_status gpp_language_parse(const char* json_text, gpp_language** out) {
    return guarded([&] {
        auto* handle = new gpp_language{gpp::parse_language(json_text ? json_text : "")};
        *out = handle;
    });
}

gpp_status gpp_language_from_file(const char* path, gpp_language** out) {
    return guarded([&] {
        auto* handle = new gpp_language{gpp::parse_language_file(path ? path : "")};
        *out = handle;
    });
}

void gpp_language_free(gpp_language* language) { delete language; }

gpp_status gpp_instance_parse(const char* json_text, gpp_instance** out) {
    return guarded([&] {
        auto* handle = new gpp_instance{gpp::parse_instance(json_text ? json_text : "")};
        *out = handle;
    });
}

gpp_status gpp_instance_from_file(const char* path, gpp_instance** out) {
    return guarded([&] {
        auto* handle = new gpp_instance{gpp::parse_instance_file(path ? path : "")};
        *out = handle;
    });
}

void gpp_instance_free(gpp_instance* instance) { delete instance; }

gpp_status gpp_closure_report(const gpp_language* language, int with_star, int with_hasse,
                              char** out_json) {
    return guarded([&] {
        const auto options = closure_options();
        const auto base = language->value.predicate_set();
        const gpp::ClosedLanguage closed =
            gpp::cap_bar_closure(language->value.domain, base, options);
        const gpp::HasseDiagram diagram = gpp::build_hasse(closed.members);
        const gpp::HasseBoundReport bound = gpp::check_hasse_bound(diagram, closed.domain);

        std::ostringstream out;
        out << "{\"kind\":\"cap_bar\",\"size\":" << closed.size()
            << ",\"reported_size\":" << closed.reported_size()
            << ",\"includes_epsilon\":" << (closed.includes_epsilon ? "true" : "false")
            << ",\"includes_bottom\":" << (closed.includes_bottom ? "true" : "false");
        if (with_hasse)
            out << ",\"hasse_edges\":" << diagram.edges.size();
        if (with_star) {
            const gpp::ClosedLanguage star =
                gpp::star_closure(language->value.domain, base, options);
            out << ",\"star_size\":" << star.size();
        }
        out << ",\"bound\":" << bound.bound
            << ",\"bound_satisfied\":" << (bound.satisfied ? "true" : "false") << '}';
        *out_json = dup_string(out.str());
    });
}

gpp_status gpp_hasse_export(const gpp_language* language, int star, char** out_json) {
    return guarded([&] {
        const auto options = closure_options();
        const auto base = language->value.predicate_set();
        const gpp::ClosedLanguage closed =
            star ? gpp::star_closure(language->value.domain, base, options)
                 : gpp::cap_bar_closure(language->value.domain, base, options);
        *out_json = dup_string(gpp::hasse_to_json(gpp::build_hasse(closed.members)));
    });
}

} // extern "C"

namespace {

gpp::SemiringKind pick_semiring(const std::string& mode, std::string semiring, bool exact) {
    if (mode == "min") {
        if (!semiring.empty() && semiring != "minplus")
            throw gpp::ValidationError("mode min uses the minplus semiring");
        return exact ? gpp::SemiringKind::MinPlusExact : gpp::SemiringKind::MinPlus;
    }
    if (mode != "partition")
        throw gpp::ValidationError("mode must be \"min\" or \"partition\"");
    if (exact)
        throw gpp::ValidationError("exact mode is only available for mode min");
    if (semiring.empty())
        semiring = "sumprod";
    return gpp::semiring_from_name(semiring);
}

} // namespace

extern "C" gpp_status gpp_solve(const gpp_instance* instance, const char* mode_c, const char* semiring_c,
                     const char* algorithm_c, int want_argmin, int exact, char** out_json) {
    return guarded([&] {
        const std::string mode = mode_c ? mode_c : "min";
        const std::string semiring = semiring_c ? semiring_c : "";
        std::string algorithm = algorithm_c ? algorithm_c : "auto";
        if (algorithm.empty())
            algorithm = "auto";
        if (algorithm != "auto" && algorithm != "neg-dp" && algorithm != "semiring")
            throw gpp::ValidationError("algorithm must be auto, neg-dp or semiring");
        const auto options = closure_options();
        const gpp::Instance& inst = instance->value;
        const gpp::SemiringKind kind = pick_semiring(mode, semiring, exact != 0);

        gpp::SolveResult result;
        if (mode == "min") {
            bool use_neg_dp = false;
            if (algorithm == "neg-dp") {
                use_neg_dp = true; // precondition failures surface as mode errors
            } else if (algorithm == "auto") {
                use_neg_dp = !want_argmin && inst.all_weights_nonpositive();
            }
            result = use_neg_dp ? gpp::minimize_nonpositive(inst, exact != 0, options)
                                : gpp::semiring_sum(inst, kind, want_argmin != 0, options);
        } else {
            if (algorithm == "neg-dp")
                throw gpp::ValidationError("neg-dp only computes mode min");
            result = gpp::semiring_sum(inst, kind, false, options);
        }
        *out_json = dup_string(gpp::result_to_json(result));
    });
}

extern "C" gpp_status gpp_oracle(const gpp_instance* instance, const char* mode_c,
                                 const char* semiring_c, const char* method_c,
                                 long long max_words, char** out_json) {
    return guarded([&] {
        const std::string mode = mode_c ? mode_c : "min";
        const std::string semiring = semiring_c ? semiring_c : "";
        const std::string method = method_c ? method_c : "brute";
        if (method != "brute" && method != "windowed")
            throw gpp::ValidationError("oracle method must be brute or windowed");
        const gpp::SemiringKind kind = pick_semiring(mode, semiring, false);
        gpp::OracleOptions options;
        if (max_words > 0) {
            options.max_words = static_cast<std::uint64_t>(max_words);
            options.max_states = static_cast<std::uint64_t>(max_words);
        }
        const gpp::Instance& inst = instance->value;
        const auto start = std::chrono::steady_clock::now();

        gpp::SolveResult result;
        auto fill = [&](auto oracle_result, bool argmin) {
            result.value = oracle_result.value;
            result.stats.oplus_ops = oracle_result.oplus_ops;
            result.stats.otimes_ops = oracle_result.otimes_ops;
            if (argmin && !oracle_result.argmin.empty())
                result.argmin = oracle_result.argmin;
        };
        const bool want_argmin = mode == "min" && method == "brute";
        switch (kind) {
        case gpp::SemiringKind::MinPlus:
        case gpp::SemiringKind::MinPlusExact:
            if (method == "brute")
                fill(gpp::brute_force_reduce<gpp::MinPlusSemiring>(inst, want_argmin, options),
                     want_argmin);
            else
                fill(gpp::windowed_dp<gpp::MinPlusSemiring>(inst, options), false);
            break;
        case gpp::SemiringKind::SumProd:
            if (method == "brute")
                fill(gpp::brute_force_reduce<gpp::SumProdSemiring>(inst, false, options), false);
            else
                fill(gpp::windowed_dp<gpp::SumProdSemiring>(inst, options), false);
            break;
        case gpp::SemiringKind::LogSumExp:
            if (method == "brute")
                fill(gpp::brute_force_reduce<gpp::LogSumExpSemiring>(inst, false, options), false);
            else
                fill(gpp::windowed_dp<gpp::LogSumExpSemiring>(inst, options), false);
            break;
        }
        result.stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        *out_json = dup_string(gpp::result_to_json(result));
    });
}

extern "C" gpp_status gpp_bench(const gpp_language* language, const long long* n_values,
                                int n_count, const char* semiring_c, char** out_json) {
    return guarded([&] {
        if (!n_values || n_count < 1)
            throw gpp::ValidationError("bench needs at least one chain length");
        const std::string semiring = semiring_c && *semiring_c ? semiring_c : "minplus";
        const gpp::SemiringKind kind = gpp::semiring_from_name(semiring);
        const auto options = closure_options();

        std::ostringstream out;
        out << "{\"semiring\":\"" << semiring << "\",\"points\":[";
        std::vector<std::uint64_t> totals;
        for (int i = 0; i < n_count; ++i) {
            const long long n = n_values[i];
            if (n < 1)
                throw gpp::ValidationError("bench lengths must be >= 1");
            // deterministic instance: every predicate constrained at every
            // position with weight -1
            gpp::Instance inst;
            inst.language = language->value;
            inst.n = n;
            for (std::size_t pi = 0; pi < inst.language.predicates.size(); ++pi) {
                const int arity = inst.language.predicates[pi].second.arity();
                for (long long pos = 1; pos + arity - 1 <= n; ++pos)
                    inst.weights.emplace(std::make_pair(static_cast<int>(pi), pos),
                                         gpp::Energy(-1.0));
            }
            const gpp::SolveResult result = gpp::semiring_sum(inst, kind, false, options);
            const std::uint64_t ops = result.stats.oplus_ops + result.stats.otimes_ops;
            totals.push_back(ops);
            if (i)
                out << ',';
            out << "{\"n\":" << n << ",\"value\":" << gpp::format_double(result.value)
                << ",\"oplus_ops\":" << result.stats.oplus_ops
                << ",\"otimes_ops\":" << result.stats.otimes_ops << ",\"ops\":" << ops
                << ",\"wall_ms\":" << gpp::format_double(result.stats.wall_ms) << '}';
        }
        out << "],\"ratios\":[";
        for (std::size_t i = 1; i < totals.size(); ++i) {
            if (i > 1)
                out << ',';
            const double ratio =
                totals[i - 1] ? static_cast<double>(totals[i]) / static_cast<double>(totals[i - 1])
                              : 0.0;
            out << gpp::format_double(ratio);
        }
        out << "]}";
        *out_json = dup_string(out.str());
    });
}

namespace {

int param_int(const json& params, const char* key, int fallback) {
    if (!params.contains(key))
        return fallback;
    if (!params[key].is_number_integer())
        throw gpp::ValidationError(std::string("parameter ") + key + " must be an integer");
    return params[key].get<int>();
}

std::uint64_t param_u64(const json& params, const char* key, std::uint64_t fallback) {
    if (!params.contains(key))
        return fallback;
    return params[key].get<std::uint64_t>();
}

gpp::Language generate_language(const std::string& example, const json& params) {
    if (example == "ex1")
        return gpp::gen_example1(param_int(params, "domain_size", 4));
    if (example == "roots") {
        const int domain_size = param_int(params, "domain_size", 6);
        const int num_classes = param_int(params, "num_classes", 2);
        if (num_classes < 1 || num_classes > domain_size)
            throw gpp::ValidationError("num_classes must be in [1, domain_size]");
        const gpp::Domain domain(domain_size);
        std::vector<std::vector<gpp::Letter>> classes(static_cast<std::size_t>(num_classes));
        for (gpp::Letter a = 1; a <= domain_size; ++a)
            classes[static_cast<std::size_t>((a - 1) % num_classes)].push_back(a);
        const auto words = gpp::gen_random_prefix_closed(
            num_classes, param_int(params, "pi_size", 4), param_int(params, "max_len", 3),
            param_u64(params, "seed", 1));
        return gpp::gen_equivalence_prefix(domain, classes, words);
    }
    if (example == "products") {
        const int domain_size = param_int(params, "domain_size", 8);
        const int num_blocks = param_int(params, "num_blocks", 4);
        if (num_blocks < 1 || num_blocks > domain_size)
            throw gpp::ValidationError("num_blocks must be in [1, domain_size]");
        const gpp::Domain domain(domain_size);
        std::vector<std::vector<gpp::Letter>> family(static_cast<std::size_t>(num_blocks));
        for (gpp::Letter a = 1; a <= domain_size; ++a)
            family[static_cast<std::size_t>((a - 1) * num_blocks / domain_size)].push_back(a);
        std::vector<gpp::Letter> whole;
        for (gpp::Letter a = 1; a <= domain_size; ++a)
            whole.push_back(a);
        family.push_back(std::move(whole)); // block intersections stay inside
        return gpp::gen_family_products(domain, family, param_int(params, "r1", 1),
                                        param_int(params, "r2", 1));
    }
    if (example == "multiscale") {
        const int domain_size = param_int(params, "domain_size", 8);
        const int levels = param_int(params, "levels", 2);
        const gpp::Domain domain(domain_size);
        std::vector<std::vector<std::vector<gpp::Letter>>> partitions;
        for (int lvl = 0; lvl < levels; ++lvl) {
            // 2^lvl blocks of equal size, coarsest first
            const int blocks = 1 << lvl;
            if (blocks > domain_size)
                throw gpp::ValidationError("too many levels for the domain size");
            std::vector<std::vector<gpp::Letter>> partition(static_cast<std::size_t>(blocks));
            for (gpp::Letter a = 1; a <= domain_size; ++a)
                partition[static_cast<std::size_t>((a - 1) * blocks / domain_size)].push_back(a);
            partitions.push_back(std::move(partition));
        }
        return gpp::gen_multiscale(domain, partitions, param_int(params, "r", 2));
    }
    if (example == "waves") {
        const int domain_size = param_int(params, "domain_size", 3);
        const gpp::Domain domain(domain_size);
        const auto moves = gpp::waves_default_moves(domain);
        const auto words = gpp::gen_random_prefix_closed(
            static_cast<int>(moves.size()), param_int(params, "pi_size", 3),
            param_int(params, "max_len", 2), param_u64(params, "seed", 1));
        return gpp::gen_waves(domain, words, gpp::all_nonempty_subsets(domain), moves);
    }
    throw gpp::ValidationError("unknown example: " + example);
}

} // namespace

extern "C" gpp_status gpp_generate(const char* example_c, const char* params_json,
                                   char** out_language_json, char** out_instance_json) {
    return guarded([&] {
        const std::string example = example_c ? example_c : "";
        json params = json::object();
        if (params_json && *params_json) {
            params = json::parse(params_json, nullptr, false);
            if (params.is_discarded() || !params.is_object())
                throw gpp::ValidationError("generator parameters must be a JSON object");
        }
        const gpp::Language language = generate_language(example, params);
        *out_language_json = dup_string(gpp::serialize_language(language));
        if (out_instance_json) {
            *out_instance_json = nullptr;
            if (params.contains("n")) {
                if (!params["n"].is_number_integer() || params["n"].get<long long>() < 0)
                    throw gpp::ValidationError("parameter n must be a nonnegative integer");
                const long long n = params["n"].get<long long>();
                std::string sign = "nonpositive";
                if (params.contains("weights")) {
                    if (!params["weights"].is_string())
                        throw gpp::ValidationError("weights must be nonpositive or mixed");
                    sign = params["weights"].get<std::string>();
                }
                if (sign != "nonpositive" && sign != "mixed")
                    throw gpp::ValidationError("weights must be nonpositive or mixed");
                double density = 0.6;
                if (params.contains("density")) {
                    if (!params["density"].is_number())
                        throw gpp::ValidationError("density must be a number in [0, 1]");
                    density = params["density"].get<double>();
                    if (density < 0.0 || density > 1.0)
                        throw gpp::ValidationError("density must be a number in [0, 1]");
                }
                const gpp::Instance inst = gpp::gen_random_instance(
                    language, n,
                    sign == "mixed" ? gpp::WeightSign::Mixed : gpp::WeightSign::NonPositive,
                    param_u64(params, "seed", 1), density);
                *out_instance_json = dup_string(gpp::serialize_instance(inst));
            }
        }
    });
}

extern "C" gpp_status gpp_evaluate_energy(const gpp_instance* instance, const int* letters,
                                          size_t count, double* out_energy) {
    return guarded([&] {
        gpp::Word w(std::vector<gpp::Letter>(letters, letters + count),
                    instance->value.language.domain);
        *out_energy = instance->value.evaluate_energy(w);
    });
}
