#include "gpp/solver.hpp"

#include <algorithm>
#include <chrono>

#include "gpp/errors.hpp"

namespace gpp {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// (predicate index, arity) pairs of base predicates anchoring each node:
// base b anchors node a iff b >= a. The weight of b ending at position s
// joins phi_s(a) when s >= arity(b) and a weight is stored there.
std::vector<std::vector<std::pair<int, int>>> anchor_table(const Language& language,
                                                           const HasseDiagram& diagram) {
    std::vector<std::vector<std::pair<int, int>>> anchors(diagram.nodes.size());
    for (std::size_t node = 0; node < diagram.nodes.size(); ++node) {
        if (diagram.nodes[node].is_bottom())
            continue;
        for (std::size_t pi = 0; pi < language.predicates.size(); ++pi) {
            const Predicate& base = language.predicates[pi].second;
            if (ge(base, diagram.nodes[node]))
                anchors[node].emplace_back(static_cast<int>(pi), base.arity());
        }
    }
    return anchors;
}

template <class S>
typename S::Value phi_value(const Instance& inst,
                            const std::vector<std::pair<int, int>>& anchors, long long s,
                            std::uint64_t& otimes) {
    typename S::Value phi = S::one();
    for (const auto& [pred_index, arity] : anchors) {
        if (s < arity)
            continue;
        auto it = inst.weights.find(std::make_pair(pred_index, s - arity + 1));
        if (it == inst.weights.end())
            continue;
        phi = S::times(phi, lift_energy<S>(it->second));
        ++otimes;
    }
    return phi;
}

} // namespace

std::vector<int> star_zero_classes(const HasseDiagram& diagram) {
    std::vector<int> classes;
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
        const Predicate& p = diagram.nodes[i];
        if (p.is_epsilon() || p.is_bottom())
            continue;
        if (last_projection(p).count() == 1)
            classes.push_back(static_cast<int>(i));
    }
    return classes;
}

std::vector<std::vector<int>> predecessor_sets(const HasseDiagram& diagram) {
    const std::vector<int> carriers = star_zero_classes(diagram);
    std::vector<std::vector<int>> result(diagram.nodes.size());
    for (std::size_t node = 0; node < diagram.nodes.size(); ++node) {
        const Predicate& alpha = diagram.nodes[node];
        if (alpha.is_epsilon() || alpha.is_bottom())
            continue;
        const Predicate alpha_drop = prefix_drop(alpha);
        std::vector<Predicate> child_drops;
        for (int child : diagram.children[node]) {
            const Predicate& gamma = diagram.nodes[child];
            if (gamma.is_bottom())
                continue;
            child_drops.push_back(prefix_drop(gamma));
        }
        for (int beta : carriers) {
            const Predicate& b = diagram.nodes[beta];
            if (!ge(alpha_drop, b))
                continue;
            bool blocked = false;
            for (const Predicate& gd : child_drops)
                if (ge(gd, b)) {
                    blocked = true;
                    break;
                }
            if (!blocked)
                result[node].push_back(beta);
        }
    }
    return result;
}

template <class S>
std::vector<typename S::Value> accumulate_w_from_m(const std::vector<typename S::Value>& m,
                                                   const HasseDiagram& diagram, bool use_sweep) {
    if (m.size() != diagram.nodes.size())
        throw ValidationError("layer size does not match the diagram");
    std::vector<typename S::Value> w(m.size(), S::zero());
    if (use_sweep) {
        if (!S::idempotent_plus)
            throw ModeError("the upward sweep requires an idempotent oplus");
        for (int node : diagram.topo_order) {
            typename S::Value acc = m[node];
            for (int child : diagram.children[node])
                acc = S::plus(acc, w[child]);
            w[node] = acc;
        }
        return w;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        typename S::Value acc = m[i];
        for (std::size_t j = 0; j < m.size(); ++j)
            if (i != j && ge(diagram.nodes[i], diagram.nodes[j]))
                acc = S::plus(acc, m[j]);
        w[i] = acc;
    }
    return w;
}

template <class S>
TypedSolveResult<S> run_minimize_nonpositive(const Instance& inst,
                                             const ClosureOptions& options) {
    const auto start = Clock::now();
    for (const auto& [key, energy] : inst.weights)
        if (energy.value > 0.0)
            throw ModeError("instance has a positive weight; use the semiring path "
                            "(semiring_sum with minplus) instead");

    TypedSolveResult<S> result;
    result.value = S::one();
    if (inst.language.predicates.empty() || inst.n == 0) {
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }

    const ClosedLanguage closed =
        cap_bar_closure(inst.language.domain, inst.language.predicate_set(), options);
    const HasseDiagram diagram = build_hasse(closed.members);
    result.stats.closure_size = closed.size();
    result.stats.hasse_edges = diagram.edges.size();

    const auto anchors = anchor_table(inst.language, diagram);
    const int m = static_cast<int>(diagram.nodes.size());
    const int eps = diagram.index_of(Predicate::epsilon());

    // back-pointers into the previous layer: node -> index of its prefix drop
    std::vector<int> drop_index(m, -1);
    for (int i = 0; i < m; ++i) {
        const Predicate& p = diagram.nodes[i];
        if (p.is_epsilon() || p.is_bottom())
            continue;
        drop_index[i] = diagram.index_of(prefix_drop(p));
    }

    std::vector<typename S::Value> prev(m, S::one()); // W_0 = 0 energy
    std::vector<typename S::Value> cur(m, S::zero());
    for (long long s = 1; s <= inst.n; ++s) {
        for (int node : diagram.topo_order) {
            const Predicate& alpha = diagram.nodes[node];
            if (alpha.is_bottom()) {
                cur[node] = S::zero();
                continue;
            }
            const typename S::Value phi =
                phi_value<S>(inst, anchors[node], s, result.stats.otimes_ops);
            typename S::Value back = alpha.is_epsilon() ? S::one() : prev[drop_index[node]];
            typename S::Value best = S::times(back, phi);
            ++result.stats.otimes_ops;
            for (int child : diagram.children[node]) {
                best = S::plus(best, cur[child]);
                ++result.stats.oplus_ops;
            }
            cur[node] = best;
        }
        std::swap(prev, cur);
    }
    result.value = prev[eps];
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

template <class S>
TypedSolveResult<S> run_semiring_sum(const Instance& inst, bool want_argmin,
                                     const ClosureOptions& options, Alg2Trace<S>* trace) {
    const auto start = Clock::now();
    TypedSolveResult<S> result;

    if (inst.language.predicates.empty()) {
        result.value = replicated_one<S>(inst.n, inst.language.domain.size);
        if (want_argmin && S::idempotent_plus)
            result.argmin = std::vector<Letter>(static_cast<std::size_t>(inst.n), 1);
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }

    const ClosedLanguage star =
        star_closure(inst.language.domain, inst.language.predicate_set(), options);
    const HasseDiagram diagram = build_hasse(star.members);
    result.stats.closure_size = star.cap_bar_size;
    result.stats.star_size = star.size();
    result.stats.hasse_edges = diagram.edges.size();

    const auto anchors = anchor_table(inst.language, diagram);
    const std::vector<int> carriers = star_zero_classes(diagram);
    const std::vector<std::vector<int>> preds = predecessor_sets(diagram);
    const int m = static_cast<int>(diagram.nodes.size());

    std::vector<typename S::Value> prev(m, S::zero());
    std::vector<typename S::Value> cur(m, S::zero());
    if (trace)
        trace->m_layers.push_back(prev);

    // choices[s-1][k]: predecessor chosen for carrier k at layer s;
    // -1 is the empty-word bootstrap, -2 unreachable.
    std::vector<std::vector<int>> choices;
    const bool track = want_argmin && S::idempotent_plus;
    if (track)
        choices.reserve(static_cast<std::size_t>(inst.n));

    for (long long s = 1; s <= inst.n; ++s) {
        std::fill(cur.begin(), cur.end(), S::zero());
        std::vector<int> layer_choice;
        if (track)
            layer_choice.assign(carriers.size(), -2);
        for (std::size_t k = 0; k < carriers.size(); ++k) {
            const int node = carriers[k];
            const Predicate& alpha = diagram.nodes[node];
            const typename S::Value phi =
                phi_value<S>(inst, anchors[node], s, result.stats.otimes_ops);
            typename S::Value acc = S::zero();
            for (int beta : preds[node]) {
                const typename S::Value combined = S::plus(acc, prev[beta]);
                ++result.stats.oplus_ops;
                if (track && prev[beta] < acc)
                    layer_choice[k] = beta;
                acc = combined;
            }
            if (s == 1 && alpha.arity() == 1) {
                const typename S::Value one = S::one();
                const typename S::Value combined = S::plus(acc, one);
                ++result.stats.oplus_ops;
                if (track && one < acc)
                    layer_choice[k] = -1;
                acc = combined;
            }
            cur[node] = S::times(phi, acc);
            ++result.stats.otimes_ops;
        }
        if (track)
            choices.push_back(std::move(layer_choice));
        std::swap(prev, cur);
        if (trace)
            trace->m_layers.push_back(prev);
    }

    if (inst.n == 0) {
        result.value = S::one();
        if (want_argmin && S::idempotent_plus)
            result.argmin = std::vector<Letter>{};
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }

    typename S::Value total = S::zero();
    for (std::size_t k = 0; k < carriers.size(); ++k) {
        total = S::plus(total, prev[carriers[k]]);
        ++result.stats.oplus_ops;
    }
    result.value = total;

    if (track) {
        // pick the first carrier achieving the minimum, then walk the
        // recorded choices backwards emitting each class's last letter
        int best_class = 0;
        for (std::size_t k = 1; k < carriers.size(); ++k)
            if (prev[carriers[k]] < prev[carriers[best_class]])
                best_class = static_cast<int>(k);
        std::vector<Letter> word(static_cast<std::size_t>(inst.n), 0);
        std::vector<int> node_to_carrier(m, -1);
        for (std::size_t k = 0; k < carriers.size(); ++k)
            node_to_carrier[carriers[k]] = static_cast<int>(k);
        int k = best_class;
        for (long long s = inst.n; s >= 1; --s) {
            const Predicate& alpha = diagram.nodes[carriers[k]];
            word[static_cast<std::size_t>(s - 1)] = last_projection(alpha).letters().front();
            const int choice = choices[static_cast<std::size_t>(s - 1)][k];
            if (choice == -1)
                break;
            k = node_to_carrier[choice];
        }
        result.argmin = std::move(word);
    }
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

SolveResult minimize_nonpositive(const Instance& inst, bool exact,
                                 const ClosureOptions& options) {
    SolveResult out;
    if (exact) {
        auto typed = run_minimize_nonpositive<ExactMinPlusSemiring>(inst, options);
        out.value = typed.value.infinite ? std::numeric_limits<double>::infinity()
                                         : to_double(typed.value.q);
        if (!typed.value.infinite)
            out.exact_value = typed.value.q;
        out.stats = typed.stats;
        return out;
    }
    auto typed = run_minimize_nonpositive<MinPlusSemiring>(inst, options);
    out.value = typed.value;
    out.stats = typed.stats;
    return out;
}

SolveResult semiring_sum(const Instance& inst, SemiringKind kind, bool want_argmin,
                         const ClosureOptions& options) {
    SolveResult out;
    switch (kind) {
    case SemiringKind::MinPlus: {
        auto typed = run_semiring_sum<MinPlusSemiring>(inst, want_argmin, options);
        out.value = typed.value;
        out.argmin = std::move(typed.argmin);
        out.stats = typed.stats;
        return out;
    }
    case SemiringKind::SumProd: {
        auto typed = run_semiring_sum<SumProdSemiring>(inst, false, options);
        out.value = typed.value;
        out.stats = typed.stats;
        return out;
    }
    case SemiringKind::LogSumExp: {
        auto typed = run_semiring_sum<LogSumExpSemiring>(inst, false, options);
        out.value = typed.value;
        out.stats = typed.stats;
        return out;
    }
    case SemiringKind::MinPlusExact: {
        auto typed = run_semiring_sum<ExactMinPlusSemiring>(inst, want_argmin, options);
        out.value = typed.value.infinite ? std::numeric_limits<double>::infinity()
                                         : to_double(typed.value.q);
        if (!typed.value.infinite)
            out.exact_value = typed.value.q;
        out.argmin = std::move(typed.argmin);
        out.stats = typed.stats;
        return out;
    }
    }
    throw ModeError("unknown semiring kind");
}

template TypedSolveResult<MinPlusSemiring>
run_minimize_nonpositive<MinPlusSemiring>(const Instance&, const ClosureOptions&);
template TypedSolveResult<ExactMinPlusSemiring>
run_minimize_nonpositive<ExactMinPlusSemiring>(const Instance&, const ClosureOptions&);

template TypedSolveResult<MinPlusSemiring>
run_semiring_sum<MinPlusSemiring>(const Instance&, bool, const ClosureOptions&,
                                  Alg2Trace<MinPlusSemiring>*);
template TypedSolveResult<SumProdSemiring>
run_semiring_sum<SumProdSemiring>(const Instance&, bool, const ClosureOptions&,
                                  Alg2Trace<SumProdSemiring>*);
template TypedSolveResult<LogSumExpSemiring>
run_semiring_sum<LogSumExpSemiring>(const Instance&, bool, const ClosureOptions&,
                                    Alg2Trace<LogSumExpSemiring>*);
template TypedSolveResult<ExactMinPlusSemiring>
run_semiring_sum<ExactMinPlusSemiring>(const Instance&, bool, const ClosureOptions&,
                                       Alg2Trace<ExactMinPlusSemiring>*);

template std::vector<MinPlusSemiring::Value>
accumulate_w_from_m<MinPlusSemiring>(const std::vector<double>&, const HasseDiagram&, bool);
template std::vector<SumProdSemiring::Value>
accumulate_w_from_m<SumProdSemiring>(const std::vector<double>&, const HasseDiagram&, bool);
template std::vector<LogSumExpSemiring::Value>
accumulate_w_from_m<LogSumExpSemiring>(const std::vector<double>&, const HasseDiagram&, bool);
template std::vector<ExactMinPlusSemiring::Value>
accumulate_w_from_m<ExactMinPlusSemiring>(const std::vector<ExactTropical>&, const HasseDiagram&,
                                          bool);

} // namespace gpp
