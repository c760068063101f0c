#ifndef GPP_SOLVER_HPP
#define GPP_SOLVER_HPP

#include <optional>
#include <vector>

#include "gpp/closure.hpp"
#include "gpp/model.hpp"
#include "gpp/oracle.hpp"
#include "gpp/order.hpp"
#include "gpp/semiring.hpp"

namespace gpp {

// Node indices (into a star diagram) whose last projection is a single
// letter; epsilon and bottom are excluded. These are the only classes that
// can carry mass in the class-partition recursion.
std::vector<int> star_zero_classes(const HasseDiagram& diagram);

// For each node a with arity >= 1: the set P(a) of carrier classes b with
// drop(a) >= b and, for every Hasse child g of a (bottom skipped),
// not (drop(g) >= b). Entries for epsilon/bottom stay empty. Extending a
// word of a class in P(a) by a's last letter lands exactly in a's class.
std::vector<std::vector<int>> predecessor_sets(const HasseDiagram& diagram);

// W(a) = oplus of M(b) over all b <= a. The sweep path (children-first,
// W(a) = M(a) oplus the children's W) is only sound for idempotent oplus
// and is rejected otherwise.
template <class S>
std::vector<typename S::Value> accumulate_w_from_m(const std::vector<typename S::Value>& m,
                                                   const HasseDiagram& diagram, bool use_sweep);

template <class S>
struct TypedSolveResult {
    typename S::Value value;
    std::optional<std::vector<Letter>> argmin;
    SolveStats stats;
};

// Per-layer message tables, for structure tests; layer 0 included.
template <class S>
struct Alg2Trace {
    std::vector<std::vector<typename S::Value>> m_layers; // [s][node index]
};

// The non-positive-weight recursion over the prefix+join closure.
// Messages run children-first along the Hasse diagram; bottom is pinned to
// the additive identity and the top uses a zero back-message.
template <class S>
TypedSolveResult<S> run_minimize_nonpositive(const Instance& inst,
                                             const ClosureOptions& options = {});

// The class-partition recursion over the full closure, for any semiring.
// Traceback (idempotent min semirings only, ties by canonical key) emits
// each class's unique last letter while stepping to the chosen predecessor.
template <class S>
TypedSolveResult<S> run_semiring_sum(const Instance& inst, bool want_argmin = false,
                                     const ClosureOptions& options = {},
                                     Alg2Trace<S>* trace = nullptr);

// Runtime-dispatch front ends used by the C API and CLI.
SolveResult minimize_nonpositive(const Instance& inst, bool exact = false,
                                 const ClosureOptions& options = {});
SolveResult semiring_sum(const Instance& inst, SemiringKind kind, bool want_argmin = false,
                         const ClosureOptions& options = {});

extern template TypedSolveResult<MinPlusSemiring>
run_minimize_nonpositive<MinPlusSemiring>(const Instance&, const ClosureOptions&);
extern template TypedSolveResult<ExactMinPlusSemiring>
run_minimize_nonpositive<ExactMinPlusSemiring>(const Instance&, const ClosureOptions&);

extern template TypedSolveResult<MinPlusSemiring>
run_semiring_sum<MinPlusSemiring>(const Instance&, bool, const ClosureOptions&,
                                  Alg2Trace<MinPlusSemiring>*);
extern template TypedSolveResult<SumProdSemiring>
run_semiring_sum<SumProdSemiring>(const Instance&, bool, const ClosureOptions&,
                                  Alg2Trace<SumProdSemiring>*);
extern template TypedSolveResult<LogSumExpSemiring>
run_semiring_sum<LogSumExpSemiring>(const Instance&, bool, const ClosureOptions&,
                                    Alg2Trace<LogSumExpSemiring>*);
extern template TypedSolveResult<ExactMinPlusSemiring>
run_semiring_sum<ExactMinPlusSemiring>(const Instance&, bool, const ClosureOptions&,
                                       Alg2Trace<ExactMinPlusSemiring>*);

extern template std::vector<MinPlusSemiring::Value>
accumulate_w_from_m<MinPlusSemiring>(const std::vector<double>&, const HasseDiagram&, bool);
extern template std::vector<SumProdSemiring::Value>
accumulate_w_from_m<SumProdSemiring>(const std::vector<double>&, const HasseDiagram&, bool);
extern template std::vector<LogSumExpSemiring::Value>
accumulate_w_from_m<LogSumExpSemiring>(const std::vector<double>&, const HasseDiagram&, bool);
extern template std::vector<ExactMinPlusSemiring::Value>
accumulate_w_from_m<ExactMinPlusSemiring>(const std::vector<ExactTropical>&, const HasseDiagram&,
                                          bool);

} // namespace gpp

#endif
