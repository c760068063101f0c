#ifndef GPP_ORDER_HPP
#define GPP_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gpp/predicate.hpp"

namespace gpp {

// The suffix order: ge(a, b) iff *a contains *b. Decided combinatorially:
// bottom is the global bottom, epsilon the global top, and otherwise
// arity(a) <= arity(b) with the last-arity(a) slice of b contained in a.
bool ge(const Predicate& a, const Predicate& b);

// Transitive reduction of the strict suffix order on a node set, with a
// children-first topological ranking. Nodes are sorted by canonical key and
// edges point from parent (larger) to child (smaller); rank(parent) >
// rank(child) on every edge. Immutable once built.
struct HasseDiagram {
    std::vector<Predicate> nodes;
    std::vector<std::pair<int, int>> edges; // (parent index, child index)
    std::vector<int> rank;
    std::vector<std::vector<int>> children; // adjacency, parent -> children
    std::vector<int> topo_order;            // node indices, children first

    int index_of(const Predicate& p) const;
};

HasseDiagram build_hasse(std::vector<Predicate> nodes);

struct HasseBoundReport {
    std::size_t edge_count = 0;
    long long bound = 0;
    bool satisfied = false;
};

// Edge-count bound for diagrams of simple closed languages:
// |E| <= (1/2) * sum over nodes of (arity^2 + arity) * |D|,
// with epsilon and bottom contributing zero.
HasseBoundReport check_hasse_bound(const HasseDiagram& diagram, const Domain& domain);

// {"nodes":[keys...],"edges":[[parent,child]...]}
std::string hasse_to_json(const HasseDiagram& diagram);

} // namespace gpp

#endif
