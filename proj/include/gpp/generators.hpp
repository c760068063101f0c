#ifndef GPP_GENERATORS_HPP
#define GPP_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "gpp/model.hpp"

namespace gpp {

// Deterministic bounded PRNG draw; identical across platforms for one seed.
struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // uniform-ish in [0, bound)
    std::uint64_t below(std::uint64_t bound);
};

// The running example: one arity-5 product <{1},D,{2},D,{3}> whose
// prefix+join closure has 12 members besides epsilon, for every |D| >= 3.
Language gen_example1(int domain_size);

// Products of equivalence classes along a prefix-closed set of class words.
// `classes` partitions the domain; words hold 0-based class indices.
Language gen_equivalence_prefix(const Domain& domain,
                                const std::vector<std::vector<Letter>>& classes,
                                const std::vector<std::vector<int>>& words);

// All products of <= r1 family sets followed by <= r2 singletons, for an
// intersection-closed family.
Language gen_family_products(const Domain& domain,
                             const std::vector<std::vector<Letter>>& family, int r1, int r2);

// Products over a nested chain of partitions (coarsest first), class levels
// nondecreasing along the word, length <= r.
Language gen_multiscale(const Domain& domain,
                        const std::vector<std::vector<std::vector<Letter>>>& level_partitions,
                        int r);

// Step-pattern relations: words over a partition of D x D (consecutive-pair
// moves) ending in a suffix set, plus the suffix sets as unary predicates.
// Extensional by construction.
Language gen_waves(const Domain& domain, const std::vector<std::vector<int>>& move_words,
                   const std::vector<std::vector<Letter>>& suffix_sets,
                   const std::vector<std::vector<std::pair<Letter, Letter>>>& moves);

// The rise/fall/flat partition of D x D.
std::vector<std::vector<std::pair<Letter, Letter>>> waves_default_moves(const Domain& domain);

// All nonempty subsets of the domain (requires a small domain).
std::vector<std::vector<Letter>> all_nonempty_subsets(const Domain& domain);

// Random test material. Weights are dyadic (multiples of 1/16) so float
// sums are exact wherever the oracle needs exactness.
Language gen_random_simple(const Domain& domain, int num_predicates, int max_arity,
                           std::uint64_t seed);
Language gen_random_extensional(const Domain& domain, int num_predicates, int max_arity,
                                int max_tuples, std::uint64_t seed);

enum class WeightSign { NonPositive, Mixed };

Instance gen_random_instance(const Language& language, long long n, WeightSign sign,
                             std::uint64_t seed, double density = 0.6);

// Random prefix-closed word set over an alphabet of `symbols` letters
// (words returned as 0-based index sequences).
std::vector<std::vector<int>> gen_random_prefix_closed(int symbols, int target_size,
                                                       int max_len, std::uint64_t seed);

} // namespace gpp

#endif
