#ifndef GPP_CLOSURE_HPP
#define GPP_CLOSURE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gpp/order.hpp"
#include "gpp/predicate.hpp"

namespace gpp {

struct ClosureOptions {
    std::size_t member_cap = 200000;
};

enum class ClosureKind { Prefix, CapBar, Star };

// A closed predicate language. Members are canonical, deduplicated and
// key-sorted; epsilon is always a member, bottom only when the fixpoint
// generates it. reported_size() counts members without epsilon (bottom is
// counted), matching how closure sizes are quoted.
struct ClosedLanguage {
    Domain domain;
    std::vector<Predicate> base;
    std::vector<Predicate> members;
    ClosureKind kind = ClosureKind::CapBar;
    bool includes_epsilon = false;
    bool includes_bottom = false;
    // For star closures: size of the prefix+join stage it grew from.
    std::size_t cap_bar_size = 0;

    std::size_t size() const { return members.size(); }
    std::size_t reported_size() const { return members.size() - (includes_epsilon ? 1 : 0); }
    bool contains(const Predicate& p) const;
};

// Smallest superset closed under prefix drop; always contains epsilon.
ClosedLanguage prefix_closure(const Domain& domain, const std::vector<Predicate>& base,
                              const ClosureOptions& options = {});

// Least fixpoint under prefix drop and pairwise suffix-join. Empty join
// results are kept as the bottom member. Epsilon is force-included.
ClosedLanguage cap_bar_closure(const Domain& domain, const std::vector<Predicate>& base,
                               const ClosureOptions& options = {});

// One sweep of the singleton suffix rule over an already prefix+join closed
// set. Usually this already is the full closure of a simple input;
// star_closure verifies that instead of assuming it.
ClosedLanguage singleton_suffix_saturate(const ClosedLanguage& closed);

// The full closure (prefix drop + join + singleton suffix). Simple bases
// are seeded with the saturation sweep, which already is the fixpoint for
// languages in eliminated form (no full leading/trailing windows); the
// completion pass verifies that rather than assuming it. General bases run
// the plain three-rule fixpoint.
ClosedLanguage star_closure(const Domain& domain, const std::vector<Predicate>& base,
                            const ClosureOptions& options = {});

// The unseeded fixpoint route. Exposed so the saturation-seeded path can be
// cross-checked against it; both routes agree on bottom membership (bottom
// appears iff the prefix+join stage generates it — an empty relation never
// derives a nonempty member, so vanished intermediates are discarded).
ClosedLanguage star_closure_fixpoint(const Domain& domain, const std::vector<Predicate>& base,
                                     const ClosureOptions& options = {});

} // namespace gpp

#endif
