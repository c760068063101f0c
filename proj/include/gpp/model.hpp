#ifndef GPP_MODEL_HPP
#define GPP_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpp/domain.hpp"
#include "gpp/predicate.hpp"
#include "gpp/semiring.hpp"

namespace gpp {

// A constraint language: named, canonical, deduplicated predicates over one
// domain. All predicates share a representation kind; a file declaring
// kind "extensional" stores every predicate as a tuple set (factor entries
// are expanded at load).
struct Language {
    Domain domain;
    std::vector<std::pair<std::string, Predicate>> predicates;

    bool simple() const;
    int l_max() const;
    int index_of(const std::string& id) const; // -1 if unknown
    std::vector<Predicate> predicate_set() const;
};

// Weight keys are (predicate index, 1-based start position); the end
// position is start + arity - 1 and must stay within [1, n].
struct Instance {
    Language language;
    long long n = 0;
    std::map<std::pair<int, long long>, Energy> weights;

    double evaluate_energy(const Word& x) const;
    BigRational evaluate_energy_exact(const Word& x) const;
    bool all_weights_nonpositive() const;
};

Language parse_language(const std::string& json_text);
Language parse_language_file(const std::string& path);

// `base_dir` resolves a {"path": ...} language reference.
Instance parse_instance(const std::string& json_text, const std::string& base_dir = ".");
Instance parse_instance_file(const std::string& path);

std::string serialize_language(const Language& lang);
std::string serialize_instance(const Instance& inst);

// Folds away predicates of the form D^k x p or p x D^k: the weight moves
// onto p at the shifted position and the energy of every word is unchanged.
// Stripping never goes below arity 1.
Instance normalize_instance(const Instance& inst);

// Deterministic result record shared by solve/oracle commands. Doubles are
// printed with 17 significant digits so identical runs emit identical bytes.
struct SolveStats {
    std::size_t closure_size = 0;
    std::size_t star_size = 0;
    std::size_t hasse_edges = 0;
    std::uint64_t oplus_ops = 0;
    std::uint64_t otimes_ops = 0;
    double wall_ms = 0.0;
};

struct SolveResult {
    double value = 0.0;
    std::optional<BigRational> exact_value;
    std::optional<std::vector<Letter>> argmin;
    SolveStats stats;
};

std::string format_double(double v);
std::string result_to_json(const SolveResult& result);

} // namespace gpp

#endif
