#include "gpp/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "gpp/errors.hpp"

namespace gpp {

namespace {

std::uint64_t checked_pow(std::uint64_t base, long long exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (long long i = 0; i < exp; ++i) {
        if (v > cap / base)
            return cap + 1;
        v *= base;
    }
    return v;
}

// Lifted weights of constraints ending at `end` whose window matches the
// given word suffix.
template <class S>
typename S::Value ending_cost(const Instance& inst, const std::vector<Letter>& word,
                              long long end, std::uint64_t& otimes) {
    typename S::Value cost = S::one();
    bool any = false;
    for (std::size_t pi = 0; pi < inst.language.predicates.size(); ++pi) {
        const Predicate& p = inst.language.predicates[pi].second;
        const long long start = end - p.arity() + 1;
        if (start < 1)
            continue;
        auto it = inst.weights.find(std::make_pair(static_cast<int>(pi), start));
        if (it == inst.weights.end())
            continue;
        std::span<const Letter> window(word.data() + (start - 1),
                                       static_cast<std::size_t>(p.arity()));
        if (!p.contains(window))
            continue;
        cost = S::times(cost, lift_energy<S>(it->second));
        if (any)
            ++otimes;
        any = true;
    }
    return cost;
}

} // namespace

template <class S>
typename S::Value partial_cost(const Instance& inst, const std::vector<Letter>& prefix) {
    typename S::Value total = S::one();
    std::uint64_t scratch = 0;
    for (long long end = 1; end <= static_cast<long long>(prefix.size()); ++end)
        total = S::times(total, ending_cost<S>(inst, prefix, end, scratch));
    return total;
}

template <class S>
OracleResult<S> brute_force_reduce(const Instance& inst, bool want_argmin,
                                   const OracleOptions& options) {
    const std::uint64_t words =
        checked_pow(static_cast<std::uint64_t>(inst.language.domain.size), inst.n,
                    options.max_words);
    if (words > options.max_words)
        throw CapacityError("brute force word count exceeds the cap of " +
                            std::to_string(options.max_words));

    OracleResult<S> result;
    result.value = S::zero();
    std::vector<Letter> word(static_cast<std::size_t>(inst.n), 1);
    bool first = true;
    while (true) {
        typename S::Value cost = S::one();
        for (long long end = 1; end <= inst.n; ++end) {
            cost = S::times(cost, ending_cost<S>(inst, word, end, result.otimes_ops));
            ++result.otimes_ops;
        }
        if (first) {
            result.value = cost;
            if (want_argmin)
                result.argmin = word;
            first = false;
        } else {
            const typename S::Value combined = S::plus(result.value, cost);
            ++result.oplus_ops;
            if (want_argmin && S::idempotent_plus && !(S::approx_equal(combined, result.value, 0)))
                result.argmin = word;
            // lexicographic enumeration + strict improvement keeps the
            // smallest minimizer
            result.value = combined;
        }
        if (inst.n == 0)
            break;
        long long pos = inst.n;
        while (pos > 0) {
            --pos;
            if (++word[pos] <= inst.language.domain.size)
                break;
            word[pos] = 1;
            if (pos == 0)
                return result;
        }
    }
    return result;
}

template <class S>
OracleResult<S> windowed_dp(const Instance& inst, const OracleOptions& options) {
    OracleResult<S> result;
    if (inst.n == 0) {
        result.value = S::one();
        return result;
    }
    const int d = inst.language.domain.size;
    const int window = std::max(0, inst.language.l_max() - 1);
    if (checked_pow(static_cast<std::uint64_t>(d), window, options.max_states) >
        options.max_states)
        throw CapacityError("windowed DP state count exceeds the cap of " +
                            std::to_string(options.max_states));

    // Layered DP; a state is the last min(s, window) letters.
    std::map<std::vector<Letter>, typename S::Value> layer;
    layer.emplace(std::vector<Letter>{}, S::one());
    std::vector<Letter> scratch;
    for (long long s = 1; s <= inst.n; ++s) {
        std::map<std::vector<Letter>, typename S::Value> next;
        for (const auto& [state, value] : layer) {
            for (Letter a = 1; a <= d; ++a) {
                scratch = state;
                scratch.push_back(a);
                // the window is long enough for every constraint ending at s
                typename S::Value cost = S::one();
                for (std::size_t pi = 0; pi < inst.language.predicates.size(); ++pi) {
                    const Predicate& p = inst.language.predicates[pi].second;
                    const long long start = s - p.arity() + 1;
                    if (start < 1)
                        continue;
                    auto it = inst.weights.find(std::make_pair(static_cast<int>(pi), start));
                    if (it == inst.weights.end())
                        continue;
                    std::span<const Letter> tail(scratch.data() +
                                                     (scratch.size() - p.arity()),
                                                 static_cast<std::size_t>(p.arity()));
                    if (!p.contains(tail))
                        continue;
                    cost = S::times(cost, lift_energy<S>(it->second));
                    ++result.otimes_ops;
                }
                typename S::Value contribution = S::times(value, cost);
                ++result.otimes_ops;
                std::vector<Letter> key = scratch;
                if (static_cast<int>(key.size()) > window)
                    key.erase(key.begin(), key.end() - window);
                auto [it, fresh] = next.try_emplace(std::move(key), contribution);
                if (!fresh) {
                    it->second = S::plus(it->second, contribution);
                    ++result.oplus_ops;
                }
            }
        }
        layer = std::move(next);
    }
    bool first = true;
    result.value = S::zero();
    for (const auto& [state, value] : layer) {
        if (first) {
            result.value = value;
            first = false;
        } else {
            result.value = S::plus(result.value, value);
            ++result.oplus_ops;
        }
    }
    return result;
}

ClassEnumeration enumerate_classes(const ClosedLanguage& closed, int s,
                                   std::uint64_t max_words) {
    const std::uint64_t words =
        checked_pow(static_cast<std::uint64_t>(closed.domain.size), s, max_words);
    if (words > max_words)
        throw CapacityError("class enumeration word count exceeds the cap of " +
                            std::to_string(max_words));

    ClassEnumeration out;
    out.members = closed.members;
    const std::size_t m = out.members.size();
    out.raw.resize(m);
    out.exclusive.resize(m);

    // strictly-below sets, as index lists
    std::vector<std::vector<std::size_t>> below(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && ge(out.members[i], out.members[j]))
                below[i].push_back(j);

    std::vector<Letter> word(static_cast<std::size_t>(s), 1);
    std::vector<char> holds(m, 0);
    while (true) {
        Word w;
        w.letters = word;
        for (std::size_t i = 0; i < m; ++i)
            holds[i] = membership_suffix(w, out.members[i]) ? 1 : 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!holds[i])
                continue;
            out.raw[i].push_back(word);
            bool excluded = false;
            for (std::size_t j : below[i])
                if (holds[j]) {
                    excluded = true;
                    break;
                }
            if (!excluded)
                out.exclusive[i].push_back(word);
        }
        if (s == 0)
            break;
        std::size_t pos = word.size();
        while (pos > 0) {
            --pos;
            if (++word[pos] <= closed.domain.size)
                break;
            word[pos] = 1;
            if (pos == 0)
                return out;
        }
    }
    return out;
}

template MinPlusSemiring::Value partial_cost<MinPlusSemiring>(const Instance&,
                                                              const std::vector<Letter>&);
template SumProdSemiring::Value partial_cost<SumProdSemiring>(const Instance&,
                                                              const std::vector<Letter>&);
template LogSumExpSemiring::Value partial_cost<LogSumExpSemiring>(const Instance&,
                                                                  const std::vector<Letter>&);
template ExactMinPlusSemiring::Value
partial_cost<ExactMinPlusSemiring>(const Instance&, const std::vector<Letter>&);

template OracleResult<MinPlusSemiring>
brute_force_reduce<MinPlusSemiring>(const Instance&, bool, const OracleOptions&);
template OracleResult<SumProdSemiring>
brute_force_reduce<SumProdSemiring>(const Instance&, bool, const OracleOptions&);
template OracleResult<LogSumExpSemiring>
brute_force_reduce<LogSumExpSemiring>(const Instance&, bool, const OracleOptions&);
template OracleResult<ExactMinPlusSemiring>
brute_force_reduce<ExactMinPlusSemiring>(const Instance&, bool, const OracleOptions&);

template OracleResult<MinPlusSemiring> windowed_dp<MinPlusSemiring>(const Instance&,
                                                                    const OracleOptions&);
template OracleResult<SumProdSemiring> windowed_dp<SumProdSemiring>(const Instance&,
                                                                    const OracleOptions&);
template OracleResult<LogSumExpSemiring> windowed_dp<LogSumExpSemiring>(const Instance&,
                                                                        const OracleOptions&);
template OracleResult<ExactMinPlusSemiring>
windowed_dp<ExactMinPlusSemiring>(const Instance&, const OracleOptions&);

} // namespace gpp
