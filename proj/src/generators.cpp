#include "gpp/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gpp/errors.hpp"

namespace gpp {

std::uint64_t SplitMix::next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix::below(std::uint64_t bound) { return bound ? next() % bound : 0; }

namespace {

void check_partition(const Domain& domain, const std::vector<std::vector<Letter>>& classes,
                     const char* what) {
    std::vector<char> seen(static_cast<std::size_t>(domain.size) + 1, 0);
    for (const auto& cls : classes) {
        if (cls.empty())
            throw ValidationError(std::string(what) + " has an empty class");
        for (Letter a : cls) {
            if (!domain.contains(a))
                throw ValidationError(std::string(what) + " letter out of domain range");
            if (seen[static_cast<std::size_t>(a)]++)
                throw ValidationError(std::string(what) + " classes overlap");
        }
    }
    for (Letter a = 1; a <= domain.size; ++a)
        if (!seen[static_cast<std::size_t>(a)])
            throw ValidationError(std::string(what) + " does not cover the domain");
}

void check_prefix_closed(const std::vector<std::vector<int>>& words) {
    std::set<std::vector<int>> all(words.begin(), words.end());
    for (const auto& w : words) {
        if (w.empty())
            throw ValidationError("word set contains an empty word");
        if (w.size() == 1)
            continue;
        std::vector<int> prefix(w.begin(), w.end() - 1);
        if (!all.count(prefix))
            throw ValidationError("word set is not prefix closed");
    }
}

Language finish_language(const Domain& domain, std::vector<Predicate> predicates) {
    std::sort(predicates.begin(), predicates.end());
    predicates.erase(std::unique(predicates.begin(), predicates.end()), predicates.end());
    Language lang;
    lang.domain = domain;
    int index = 0;
    for (auto& p : predicates)
        lang.predicates.emplace_back("p" + std::to_string(index++), std::move(p));
    return lang;
}

} // namespace

Language gen_example1(int domain_size) {
    if (domain_size < 3)
        throw ValidationError("the running example needs a domain of size >= 3");
    const Domain domain(domain_size);
    std::vector<LetterSet> factors;
    factors.push_back(LetterSet::single(domain_size, 1));
    factors.push_back(LetterSet::full(domain_size));
    factors.push_back(LetterSet::single(domain_size, 2));
    factors.push_back(LetterSet::full(domain_size));
    factors.push_back(LetterSet::single(domain_size, 3));
    return finish_language(domain, {Predicate::simple(std::move(factors))});
}

Language gen_equivalence_prefix(const Domain& domain,
                                const std::vector<std::vector<Letter>>& classes,
                                const std::vector<std::vector<int>>& words) {
    check_partition(domain, classes, "equivalence partition");
    check_prefix_closed(words);
    std::vector<Predicate> predicates;
    for (const auto& w : words) {
        std::vector<LetterSet> factors;
        for (int cls : w) {
            if (cls < 0 || cls >= static_cast<int>(classes.size()))
                throw ValidationError("word references an unknown class");
            factors.push_back(LetterSet::of(domain.size, classes[static_cast<std::size_t>(cls)]));
        }
        predicates.push_back(Predicate::simple(std::move(factors)));
    }
    return finish_language(domain, std::move(predicates));
}

Language gen_family_products(const Domain& domain,
                             const std::vector<std::vector<Letter>>& family, int r1, int r2) {
    if (r1 < 0 || r2 < 0 || r1 + r2 < 1)
        throw ValidationError("family products need r1, r2 >= 0 with r1 + r2 >= 1");
    std::vector<LetterSet> sets;
    for (const auto& entry : family) {
        if (entry.empty())
            throw ValidationError("family contains an empty set");
        for (Letter a : entry)
            if (!domain.contains(a))
                throw ValidationError("family letter out of domain range");
        sets.push_back(LetterSet::of(domain.size, entry));
    }
    for (const auto& a : sets)
        for (const auto& b : sets) {
            const LetterSet meet = a.intersect(b);
            if (meet.empty())
                continue;
            if (std::find(sets.begin(), sets.end(), meet) == sets.end())
                throw ValidationError("family is not intersection closed");
        }

    // every product of l family sets and k trailing singletons, l<=r1, k<=r2
    std::vector<Predicate> predicates;
    std::vector<std::vector<LetterSet>> heads{{}};
    for (int l = 1; l <= r1; ++l) {
        std::vector<std::vector<LetterSet>> grown;
        for (const auto& head : heads)
            if (static_cast<int>(head.size()) == l - 1)
                for (const auto& s : sets) {
                    auto h = head;
                    h.push_back(s);
                    grown.push_back(std::move(h));
                }
        for (auto& h : grown)
            heads.push_back(std::move(h));
    }
    std::vector<std::vector<LetterSet>> tails{{}};
    for (int k = 1; k <= r2; ++k) {
        std::vector<std::vector<LetterSet>> grown;
        for (const auto& tail : tails)
            if (static_cast<int>(tail.size()) == k - 1)
                for (Letter a = 1; a <= domain.size; ++a) {
                    auto t = tail;
                    t.push_back(LetterSet::single(domain.size, a));
                    grown.push_back(std::move(t));
                }
        for (auto& t : grown)
            tails.push_back(std::move(t));
    }
    for (const auto& head : heads)
        for (const auto& tail : tails) {
            if (head.empty() && tail.empty())
                continue;
            std::vector<LetterSet> factors = head;
            factors.insert(factors.end(), tail.begin(), tail.end());
            predicates.push_back(Predicate::simple(std::move(factors)));
        }
    return finish_language(domain, std::move(predicates));
}

Language gen_multiscale(const Domain& domain,
                        const std::vector<std::vector<std::vector<Letter>>>& level_partitions,
                        int r) {
    if (r < 1)
        throw ValidationError("multiscale needs r >= 1");
    if (level_partitions.empty())
        throw ValidationError("multiscale needs at least one partition");
    for (const auto& partition : level_partitions)
        check_partition(domain, partition, "multiscale partition");
    // each level must refine the previous one
    for (std::size_t lvl = 1; lvl < level_partitions.size(); ++lvl) {
        for (const auto& fine : level_partitions[lvl]) {
            const LetterSet fine_set = LetterSet::of(domain.size, fine);
            bool nested = false;
            for (const auto& coarse : level_partitions[lvl - 1])
                if (fine_set.subset_of(LetterSet::of(domain.size, coarse))) {
                    nested = true;
                    break;
                }
            if (!nested)
                throw ValidationError("multiscale partitions are not nested");
        }
    }

    const int levels = static_cast<int>(level_partitions.size());
    std::vector<Predicate> predicates;
    // factor words with nondecreasing levels, built as (factors, min level)
    struct Item {
        std::vector<LetterSet> factors;
        int level;
    };
    std::vector<Item> frontier{{{}, 0}};
    for (int len = 1; len <= r; ++len) {
        std::vector<Item> grown;
        for (const auto& item : frontier) {
            if (static_cast<int>(item.factors.size()) != len - 1)
                continue;
            for (int lvl = item.level; lvl < levels; ++lvl)
                for (const auto& cls : level_partitions[static_cast<std::size_t>(lvl)]) {
                    Item next{item.factors, lvl};
                    next.factors.push_back(LetterSet::of(domain.size, cls));
                    predicates.push_back(Predicate::simple(next.factors));
                    grown.push_back(std::move(next));
                }
        }
        for (auto& item : grown)
            frontier.push_back(std::move(item));
    }
    return finish_language(domain, std::move(predicates));
}

std::vector<std::vector<std::pair<Letter, Letter>>> waves_default_moves(const Domain& domain) {
    std::vector<std::pair<Letter, Letter>> rise, fall, flat;
    for (Letter a = 1; a <= domain.size; ++a)
        for (Letter b = 1; b <= domain.size; ++b) {
            if (a < b)
                rise.emplace_back(a, b);
            else if (a > b)
                fall.emplace_back(a, b);
            else
                flat.emplace_back(a, b);
        }
    return {rise, fall, flat};
}

std::vector<std::vector<Letter>> all_nonempty_subsets(const Domain& domain) {
    if (domain.size > 16)
        throw ValidationError("subset enumeration needs a small domain");
    std::vector<std::vector<Letter>> subsets;
    const unsigned total = 1u << domain.size;
    for (unsigned mask = 1; mask < total; ++mask) {
        std::vector<Letter> subset;
        for (Letter a = 1; a <= domain.size; ++a)
            if (mask & (1u << (a - 1)))
                subset.push_back(a);
        subsets.push_back(std::move(subset));
    }
    return subsets;
}

Language gen_waves(const Domain& domain, const std::vector<std::vector<int>>& move_words,
                   const std::vector<std::vector<Letter>>& suffix_sets,
                   const std::vector<std::vector<std::pair<Letter, Letter>>>& moves) {
    // moves must partition D x D
    std::set<std::pair<Letter, Letter>> seen;
    std::size_t total = 0;
    for (const auto& move : moves) {
        for (const auto& [a, b] : move) {
            if (!domain.contains(a) || !domain.contains(b))
                throw ValidationError("move letter out of domain range");
            if (!seen.emplace(a, b).second)
                throw ValidationError("moves overlap");
            ++total;
        }
    }
    if (total != static_cast<std::size_t>(domain.size) * static_cast<std::size_t>(domain.size))
        throw ValidationError("moves do not partition the letter pairs");
    check_prefix_closed(move_words);
    for (const auto& subset : suffix_sets)
        if (subset.empty())
            throw ValidationError("suffix set must be nonempty");

    std::vector<Predicate> predicates;
    for (const auto& subset : suffix_sets) {
        std::vector<LetterTuple> tuples;
        for (Letter a : subset)
            tuples.push_back({a});
        predicates.push_back(Predicate::extensional(domain.size, 1, std::move(tuples)));
    }
    for (const auto& word : move_words) {
        for (int mi : word)
            if (mi < 0 || mi >= static_cast<int>(moves.size()))
                throw ValidationError("move word references an unknown move");
        for (const auto& subset : suffix_sets) {
            const LetterSet last = LetterSet::of(domain.size, subset);
            const int arity = static_cast<int>(word.size()) + 1;
            // grow tuples move by move
            std::vector<LetterTuple> partial;
            for (Letter a = 1; a <= domain.size; ++a)
                partial.push_back({a});
            for (int mi : word) {
                std::vector<LetterTuple> grown;
                for (const auto& t : partial)
                    for (const auto& [a, b] : moves[static_cast<std::size_t>(mi)])
                        if (t.back() == a) {
                            LetterTuple ext = t;
                            ext.push_back(b);
                            grown.push_back(std::move(ext));
                        }
                partial = std::move(grown);
            }
            std::vector<LetterTuple> tuples;
            for (auto& t : partial)
                if (last.contains(t.back()))
                    tuples.push_back(std::move(t));
            if (tuples.empty())
                continue; // an unsatisfiable pattern contributes no predicate
            predicates.push_back(Predicate::extensional(domain.size, arity, std::move(tuples)));
        }
    }
    return finish_language(domain, std::move(predicates));
}

Language gen_random_simple(const Domain& domain, int num_predicates, int max_arity,
                           std::uint64_t seed) {
    SplitMix rng(seed);
    std::vector<Predicate> predicates;
    int guard = 0;
    while (static_cast<int>(predicates.size()) < num_predicates && guard++ < 1000) {
        const int arity = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_arity)));
        std::vector<LetterSet> factors;
        for (int i = 0; i < arity; ++i) {
            LetterSet f(domain.size);
            for (Letter a = 1; a <= domain.size; ++a)
                if (rng.below(2))
                    f.insert(a);
            if (f.empty())
                f.insert(1 + static_cast<Letter>(rng.below(static_cast<std::uint64_t>(domain.size))));
            factors.push_back(std::move(f));
        }
        Predicate p = Predicate::simple(std::move(factors));
        if (std::find(predicates.begin(), predicates.end(), p) == predicates.end())
            predicates.push_back(std::move(p));
    }
    return finish_language(domain, std::move(predicates));
}

Language gen_random_extensional(const Domain& domain, int num_predicates, int max_arity,
                                int max_tuples, std::uint64_t seed) {
    SplitMix rng(seed);
    std::vector<Predicate> predicates;
    int guard = 0;
    while (static_cast<int>(predicates.size()) < num_predicates && guard++ < 1000) {
        const int arity = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_arity)));
        const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_tuples)));
        std::vector<LetterTuple> tuples;
        for (int t = 0; t < count; ++t) {
            LetterTuple tuple;
            for (int i = 0; i < arity; ++i)
                tuple.push_back(1 +
                                static_cast<Letter>(rng.below(static_cast<std::uint64_t>(domain.size))));
            tuples.push_back(std::move(tuple));
        }
        Predicate p = Predicate::extensional(domain.size, arity, std::move(tuples));
        if (std::find(predicates.begin(), predicates.end(), p) == predicates.end())
            predicates.push_back(std::move(p));
    }
    return finish_language(domain, std::move(predicates));
}

Instance gen_random_instance(const Language& language, long long n, WeightSign sign,
                             std::uint64_t seed, double density) {
    SplitMix rng(seed);
    Instance inst;
    inst.language = language;
    inst.n = n;
    const std::uint64_t threshold = static_cast<std::uint64_t>(density * 1000.0);
    for (std::size_t pi = 0; pi < language.predicates.size(); ++pi) {
        const int arity = language.predicates[pi].second.arity();
        for (long long pos = 1; pos + arity - 1 <= n; ++pos) {
            if (rng.below(1000) >= threshold)
                continue;
            // dyadic sixteenths, exactly representable in doubles
            long long ticks = static_cast<long long>(rng.below(129)) - 128; // [-128, 0]
            if (sign == WeightSign::Mixed)
                ticks = static_cast<long long>(rng.below(129)) - 64; // [-64, 64]
            const double w = static_cast<double>(ticks) / 16.0;
            const Energy energy(w, BigRational(ticks, 16));
            auto [it, fresh] =
                inst.weights.try_emplace(std::make_pair(static_cast<int>(pi), pos), energy);
            if (!fresh) {
                it->second.value += energy.value;
                it->second.exact += energy.exact;
            }
        }
    }
    return inst;
}

std::vector<std::vector<int>> gen_random_prefix_closed(int symbols, int target_size,
                                                       int max_len, std::uint64_t seed) {
    if (symbols < 1 || target_size < 1 || max_len < 1)
        throw ValidationError("prefix-closed generation needs positive parameters");
    SplitMix rng(seed);
    std::set<std::vector<int>> words;
    int guard = 0;
    while (static_cast<int>(words.size()) < target_size && guard++ < 10000) {
        const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
        std::vector<int> word;
        for (int i = 0; i < len; ++i) {
            word.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(symbols))));
            words.insert(word); // every prefix enters the set
        }
    }
    return {words.begin(), words.end()};
}

} // namespace gpp
