#include "gpp/order.hpp"

#include <algorithm>
#include <sstream>

#include "gpp/errors.hpp"

namespace gpp {

bool ge(const Predicate& a, const Predicate& b) {
    if (b.is_bottom())
        return true;
    if (a.is_bottom())
        return false;
    if (a.is_epsilon())
        return true;
    if (b.is_epsilon())
        return false;
    if (a.domain_size() != b.domain_size())
        throw ValidationError("predicates come from different domains");
    if (a.arity() > b.arity())
        return false;
    if (a.is_simple() && b.is_simple()) {
        const int offset = b.arity() - a.arity();
        for (int i = 0; i < a.arity(); ++i)
            if (!b.factors()[offset + i].subset_of(a.factors()[i]))
                return false;
        return true;
    }
    // General case: every suffix window of b's tuples must lie in a.
    const int k = a.arity();
    if (b.is_extensional()) {
        for (const auto& t : b.tuples()) {
            std::span<const Letter> tail(t.data() + (t.size() - k), static_cast<std::size_t>(k));
            if (!a.contains(tail))
                return false;
        }
        return true;
    }
    // b simple, a extensional: check the sliced product tuple by tuple.
    Predicate slice = to_extensional(suffix_slice(b, k));
    for (const auto& t : slice.tuples())
        if (!a.contains(t))
            return false;
    return true;
}

int HasseDiagram::index_of(const Predicate& p) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
    if (it == nodes.end() || !(*it == p))
        return -1;
    return static_cast<int>(it - nodes.begin());
}

HasseDiagram build_hasse(std::vector<Predicate> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const int m = static_cast<int>(nodes.size());

    HasseDiagram diagram;
    diagram.nodes = std::move(nodes);
    diagram.children.resize(m);
    diagram.rank.assign(m, -1);

    // Strict-order matrix as bitset rows: below[i] = { j : i > j }.
    const int words = (m + 63) / 64;
    std::vector<std::uint64_t> below(static_cast<std::size_t>(m) * words, 0);
    auto set_bit = [&](int i, int j) {
        below[static_cast<std::size_t>(i) * words + j / 64] |= std::uint64_t{1} << (j % 64);
    };
    auto get_bit = [&](int i, int j) {
        return (below[static_cast<std::size_t>(i) * words + j / 64] >> (j % 64)) & 1u;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && ge(diagram.nodes[i], diagram.nodes[j]) &&
                !(diagram.nodes[i] == diagram.nodes[j]))
                set_bit(i, j);

    // Edge (i, j) survives iff no k with i > k > j.
    for (int i = 0; i < m; ++i) {
        const std::uint64_t* row_i = &below[static_cast<std::size_t>(i) * words];
        for (int j = 0; j < m; ++j) {
            if (!get_bit(i, j))
                continue;
            bool covered = true;
            for (int w = 0; w < words && covered; ++w) {
                std::uint64_t mid = row_i[w];
                if (!mid)
                    continue;
                // clear j itself from the candidate set
                if (j / 64 == w)
                    mid &= ~(std::uint64_t{1} << (j % 64));
                while (mid) {
                    const int k = w * 64 + __builtin_ctzll(mid);
                    mid &= mid - 1;
                    if (get_bit(k, j)) {
                        covered = false;
                        break;
                    }
                }
            }
            if (covered) {
                diagram.edges.emplace_back(i, j);
                diagram.children[i].push_back(j);
            }
        }
    }
    std::sort(diagram.edges.begin(), diagram.edges.end());
    for (auto& kids : diagram.children)
        std::sort(kids.begin(), kids.end());

    // Children-first ranking; ties broken by canonical key, i.e. by node
    // index, since nodes are key-sorted.
    std::vector<int> pending(m, 0);
    std::vector<std::vector<int>> parents(m);
    for (auto [p, c] : diagram.edges) {
        ++pending[p];
        parents[c].push_back(p);
    }
    std::vector<int> ready;
    for (int i = 0; i < m; ++i)
        if (pending[i] == 0)
            ready.push_back(i);
    int next_rank = 0;
    while (!ready.empty()) {
        std::sort(ready.begin(), ready.end(), std::greater<>());
        const int node = ready.back();
        ready.pop_back();
        diagram.rank[node] = next_rank++;
        diagram.topo_order.push_back(node);
        for (int parent : parents[node])
            if (--pending[parent] == 0)
                ready.push_back(parent);
    }
    return diagram;
}

HasseBoundReport check_hasse_bound(const HasseDiagram& diagram, const Domain& domain) {
    long long weight = 0;
    for (const auto& node : diagram.nodes) {
        if (node.is_epsilon() || node.is_bottom())
            continue;
        const long long k = node.arity();
        weight += k * k + k;
    }
    HasseBoundReport report;
    report.edge_count = diagram.edges.size();
    report.bound = weight * domain.size / 2;
    report.satisfied = static_cast<long long>(report.edge_count) <= report.bound;
    return report;
}

std::string hasse_to_json(const HasseDiagram& diagram) {
    std::ostringstream out;
    out << "{\"nodes\":[";
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
        if (i)
            out << ',';
        out << '"' << diagram.nodes[i].key() << '"';
    }
    out << "],\"edges\":[";
    for (std::size_t i = 0; i < diagram.edges.size(); ++i) {
        if (i)
            out << ',';
        out << '[' << diagram.edges[i].first << ',' << diagram.edges[i].second << ']';
    }
    out << "]}";
    return out.str();
}

} // namespace gpp
