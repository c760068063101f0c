#ifndef GPP_ORACLE_HPP
#define GPP_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gpp/closure.hpp"
#include "gpp/model.hpp"

namespace gpp {

struct OracleOptions {
    std::uint64_t max_words = 2000000;        // cap on |D|^n for brute force
    std::uint64_t max_states = 2000000;       // cap on |D|^(l_max-1) for the windowed DP
};

// Reference values by full enumeration of D^n in lexicographic order.
// For min-style semirings the argmin is the lexicographically smallest
// minimizer.
template <class S>
struct OracleResult {
    typename S::Value value;
    std::vector<Letter> argmin; // empty unless requested and meaningful
    std::uint64_t oplus_ops = 0;
    std::uint64_t otimes_ops = 0;
};

template <class S>
OracleResult<S> brute_force_reduce(const Instance& inst, bool want_argmin = false,
                                   const OracleOptions& options = {});

// Forward DP whose states are the last (l_max - 1) letters; the standard
// bounded-window baseline. Independent of the closure machinery.
template <class S>
OracleResult<S> windowed_dp(const Instance& inst, const OracleOptions& options = {});

// Partial cost of a prefix: the product of lifted weights of constraints
// ending at or before its length.
template <class S>
typename S::Value partial_cost(const Instance& inst, const std::vector<Letter>& prefix);

// Word classes at length s: raw[i] lists the words of D^s whose suffix lies
// in members[i]; exclusive[i] removes words covered by any strictly smaller
// member. Used by the structure tests.
struct ClassEnumeration {
    std::vector<Predicate> members;
    std::vector<std::vector<std::vector<Letter>>> raw;
    std::vector<std::vector<std::vector<Letter>>> exclusive;
};

ClassEnumeration enumerate_classes(const ClosedLanguage& closed, int s,
                                   std::uint64_t max_words = 100000);

extern template OracleResult<MinPlusSemiring>
brute_force_reduce<MinPlusSemiring>(const Instance&, bool, const OracleOptions&);
extern template OracleResult<SumProdSemiring>
brute_force_reduce<SumProdSemiring>(const Instance&, bool, const OracleOptions&);
extern template OracleResult<LogSumExpSemiring>
brute_force_reduce<LogSumExpSemiring>(const Instance&, bool, const OracleOptions&);
extern template OracleResult<ExactMinPlusSemiring>
brute_force_reduce<ExactMinPlusSemiring>(const Instance&, bool, const OracleOptions&);

extern template OracleResult<MinPlusSemiring> windowed_dp<MinPlusSemiring>(const Instance&,
                                                                           const OracleOptions&);
extern template OracleResult<SumProdSemiring> windowed_dp<SumProdSemiring>(const Instance&,
                                                                           const OracleOptions&);
extern template OracleResult<LogSumExpSemiring> windowed_dp<LogSumExpSemiring>(const Instance&,
                                                                               const OracleOptions&);
extern template OracleResult<ExactMinPlusSemiring>
windowed_dp<ExactMinPlusSemiring>(const Instance&, const OracleOptions&);

extern template MinPlusSemiring::Value
partial_cost<MinPlusSemiring>(const Instance&, const std::vector<Letter>&);
extern template SumProdSemiring::Value
partial_cost<SumProdSemiring>(const Instance&, const std::vector<Letter>&);
extern template LogSumExpSemiring::Value
partial_cost<LogSumExpSemiring>(const Instance&, const std::vector<Letter>&);
extern template ExactMinPlusSemiring::Value
partial_cost<ExactMinPlusSemiring>(const Instance&, const std::vector<Letter>&);

} // namespace gpp

#endif
