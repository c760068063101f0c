#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpp/generators.hpp"
#include "gpp/predicate.hpp"
#include "test_util.hpp"

using namespace gpp;
using namespace gpp::test;

TEST_CASE("canonicalization") {
    CHECK(Predicate::bottom().key() == "#bot");
    CHECK(Predicate::epsilon().key() == "#eps");

    // an empty factor or tuple set collapses to bottom
    CHECK(Predicate::simple({LetterSet(2)}).is_bottom());
    CHECK(Predicate::extensional(2, 2, {}).is_bottom());

    // tuple order and duplicates do not matter
    CHECK(ext_of(2, {{2, 1}, {1, 2}, {2, 1}}) == ext_of(2, {{1, 2}, {2, 1}}));
    CHECK(simple_of(3, {{1, 2}, {3}}) == simple_of(3, {{2, 1}, {3}}));

    CHECK(simple_of(2, {{1}, {2}}).key() == "s[{1},{2}]");
    CHECK(ext_of(2, {{1, 2}}).key() == "x[(1,2)]");
}

TEST_CASE("membership_suffix") {
    CHECK(membership_suffix(word_of(2, {1, 1, 2}), ext_of(2, {{1, 2}})));
    CHECK_FALSE(membership_suffix(word_of(2, {1, 1, 2}), simple_of(2, {{1}})));
    CHECK(membership_suffix(word_of(2, {2}), Predicate::epsilon()));
    CHECK_FALSE(membership_suffix(word_of(2, {1}), ext_of(2, {{1, 1}})));
    CHECK_FALSE(membership_suffix(word_of(2, {1}), Predicate::bottom()));
}

TEST_CASE("suffix_join examples") {
    const int d = 4;
    CHECK(suffix_join(simple_of(d, {{1}}), Predicate::epsilon()) == simple_of(d, {{1}}));
    CHECK(suffix_join(full_factor_simple(d, {1, 0, 2}), simple_of(d, {{1}})).is_bottom());
    CHECK(suffix_join(full_factor_simple(d, {1, 0, 2}), full_factor_simple(d, {1, 0})) ==
          full_factor_simple(d, {1, 1, 2}));
    CHECK(suffix_join(ext_of(2, {{1, 1}, {2, 2}}), ext_of(2, {{2}})) == ext_of(2, {{2, 2}}));
    CHECK(suffix_join(Predicate::bottom(), simple_of(d, {{1}})).is_bottom());
}

TEST_CASE("prefix_drop") {
    const int d = 4;
    CHECK(prefix_drop(full_factor_simple(d, {1, 0, 2})) == full_factor_simple(d, {1, 0}));
    CHECK(prefix_drop(simple_of(d, {{1}})).is_epsilon());
    CHECK(prefix_drop(Predicate::bottom()).is_bottom());
    CHECK(prefix_drop(ext_of(2, {{1, 2}, {2, 1}})) == ext_of(2, {{1}, {2}}));
    CHECK_THROWS_AS(prefix_drop(Predicate::epsilon()), ValidationError);
}

TEST_CASE("singleton_extend") {
    const int d = 4;
    CHECK(singleton_extend(full_factor_simple(d, {1, 0}), 2) == simple_of(d, {{1}, {2}}));
    CHECK(singleton_extend(simple_of(d, {{1}}), 2) == simple_of(d, {{2}}));
    CHECK(singleton_extend(Predicate::bottom(), 1).is_bottom());
    CHECK(singleton_extend(ext_of(2, {{1, 2}, {2, 1}}), 1) == ext_of(2, {{1, 1}, {2, 1}}));
    CHECK_THROWS_AS(singleton_extend(Predicate::epsilon(), 1), ValidationError);
}

TEST_CASE("suffix_slice") {
    const int d = 4;
    CHECK(suffix_slice(full_factor_simple(d, {1, 0, 2}), 2) == full_factor_simple(d, {0, 2}));
    CHECK(suffix_slice(ext_of(3, {{1, 2}, {3, 2}}), 1) == ext_of(3, {{2}}));
    CHECK(suffix_slice(simple_of(d, {{1}}), 0).is_epsilon());
    CHECK_THROWS_AS(suffix_slice(simple_of(d, {{1}}), 2), ValidationError);
}

TEST_CASE("last_projection") {
    CHECK(last_projection(simple_of(3, {{1}, {3}})).letters() == std::vector<Letter>{3});
    CHECK(last_projection(ext_of(2, {{1, 1}, {1, 2}})).letters() == std::vector<Letter>{1, 2});
    CHECK(last_projection(Predicate::bottom()).empty());
    CHECK_THROWS_AS(last_projection(Predicate::epsilon()), ValidationError);
}

namespace {

// seeded pool of mixed-kind predicates for the property checks
std::vector<Predicate> predicate_pool(int domain_size, int count, std::uint64_t seed) {
    SplitMix rng(seed);
    std::vector<Predicate> pool;
    pool.push_back(Predicate::epsilon());
    pool.push_back(Predicate::bottom());
    while (static_cast<int>(pool.size()) < count) {
        const int arity = 1 + static_cast<int>(rng.below(3));
        if (rng.below(2)) {
            std::vector<LetterSet> factors;
            for (int i = 0; i < arity; ++i) {
                LetterSet f(domain_size);
                for (Letter a = 1; a <= domain_size; ++a)
                    if (rng.below(2))
                        f.insert(a);
                if (f.empty())
                    f.insert(1 + static_cast<Letter>(rng.below(domain_size)));
                factors.push_back(std::move(f));
            }
            pool.push_back(Predicate::simple(std::move(factors)));
        } else {
            std::vector<LetterTuple> tuples;
            const int rows = 1 + static_cast<int>(rng.below(4));
            for (int r = 0; r < rows; ++r) {
                LetterTuple t;
                for (int i = 0; i < arity; ++i)
                    t.push_back(1 + static_cast<Letter>(rng.below(domain_size)));
                tuples.push_back(std::move(t));
            }
            pool.push_back(Predicate::extensional(domain_size, arity, std::move(tuples)));
        }
    }
    return pool;
}

} // namespace

TEST_CASE("suffix_join is commutative and associative") {
    const int d = 3;
    const auto pool = predicate_pool(d, 12, 17);
    for (const auto& a : pool)
        for (const auto& b : pool) {
            CHECK(suffix_join(a, b) == suffix_join(b, a));
            for (const auto& c : pool)
                CHECK(suffix_join(a, suffix_join(b, c)) == suffix_join(suffix_join(a, b), c));
        }
}

TEST_CASE("suffix_join realizes the word-set intersection") {
    const int d = 3;
    const auto pool = predicate_pool(d, 16, 23);
    const auto words = all_words(d, 5);
    for (const auto& a : pool)
        for (const auto& b : pool) {
            const Predicate joined = suffix_join(a, b);
            for (const auto& w : words) {
                if (static_cast<int>(w.size()) > a.arity() + b.arity() + 2)
                    continue;
                const bool expected = oracle_star_member(w, a) && oracle_star_member(w, b);
                CHECK(membership_suffix(Word(w, Domain(d)), joined) == expected);
            }
        }
}

TEST_CASE("simple joins stay simple") {
    const int d = 3;
    SplitMix rng(5);
    const Language lang = gen_random_simple(Domain(d), 6, 3, 11);
    for (const auto& [ia, a] : lang.predicates)
        for (const auto& [ib, b] : lang.predicates) {
            const Predicate joined = suffix_join(a, b);
            CHECK((joined.is_simple() || joined.is_bottom()));
        }
}

TEST_CASE("prefix_drop keeps word prefixes") {
    const int d = 3;
    const auto pool = predicate_pool(d, 14, 31);
    const auto words = all_words(d, 5);
    for (const auto& p : pool) {
        if (p.is_epsilon() || p.is_bottom())
            continue;
        const Predicate dropped = prefix_drop(p);
        for (const auto& w : words) {
            if (w.empty() || static_cast<int>(w.size()) < p.arity())
                continue;
            if (!oracle_star_member(w, p))
                continue;
            const std::vector<Letter> head(w.begin(), w.end() - 1);
            CHECK(oracle_star_member(head, dropped));
        }
    }
}
