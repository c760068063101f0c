#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gpp/generators.hpp"
#include "gpp/oracle.hpp"
#include "test_util.hpp"

using namespace gpp;
using namespace gpp::test;

namespace {

Instance chain_instance() {
    return parse_instance(R"({
        "language": {"domain":{"size":2},"kind":"simple",
                     "predicates":[{"id":"p0","factors":[[1],[1]]}]},
        "n": 3,
        "constraints": [{"pred":"p0","pos":1,"weight":-1},
                        {"pred":"p0","pos":2,"weight":-1}]})");
}

Instance sumprod_instance() {
    // lifted value exp(-w) = 0.5 at both unary positions
    const double w = std::log(2.0);
    Instance inst;
    inst.language = parse_language(
        R"({"domain":{"size":2},"kind":"simple","predicates":[{"id":"u","factors":[[1]]}]})");
    inst.n = 2;
    inst.weights.emplace(std::make_pair(0, 1LL), Energy(w));
    inst.weights.emplace(std::make_pair(0, 2LL), Energy(w));
    return inst;
}

} // namespace

TEST_CASE("brute force on the chain instance") {
    const auto result = brute_force_reduce<MinPlusSemiring>(chain_instance(), true);
    CHECK(result.value == -2.0);
    CHECK(result.argmin == std::vector<Letter>{1, 1, 1});
}

TEST_CASE("brute force sums the partition example") {
    const auto result = brute_force_reduce<SumProdSemiring>(sumprod_instance());
    CHECK(result.value == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("brute force on the empty language") {
    Instance inst;
    inst.language.domain = Domain(2);
    inst.n = 3;
    const auto result = brute_force_reduce<SumProdSemiring>(inst);
    CHECK(result.value == 8.0);
}

TEST_CASE("brute force respects the word cap") {
    Instance inst;
    inst.language.domain = Domain(2);
    inst.n = 30;
    OracleOptions options;
    options.max_words = 1000;
    CHECK_THROWS_AS((void)brute_force_reduce<MinPlusSemiring>(inst, false, options),
                    CapacityError);
}

TEST_CASE("windowed dp equals brute force") {
    CHECK(windowed_dp<MinPlusSemiring>(chain_instance()).value == -2.0);
    CHECK(windowed_dp<SumProdSemiring>(sumprod_instance()).value ==
          doctest::Approx(2.25).epsilon(1e-12));

    Instance empty;
    empty.language.domain = Domain(3);
    empty.n = 0;
    CHECK(windowed_dp<SumProdSemiring>(empty).value == 1.0);
}

TEST_CASE("windowed dp equals brute force on random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int d = 2 + static_cast<int>(seed % 2);
        const Language lang =
            gen_random_simple(Domain(d), 1 + static_cast<int>(seed % 3), 3, 300 + seed);
        const long long n = 1 + static_cast<long long>(seed % 6);
        const Instance inst = gen_random_instance(lang, n, WeightSign::Mixed, seed, 0.7);

        const auto brute_min = brute_force_reduce<MinPlusSemiring>(inst);
        const auto dp_min = windowed_dp<MinPlusSemiring>(inst);
        CHECK(brute_min.value == dp_min.value); // dyadic weights: exact

        const auto brute_sum = brute_force_reduce<SumProdSemiring>(inst);
        const auto dp_sum = windowed_dp<SumProdSemiring>(inst);
        CHECK(dp_sum.value ==
              doctest::Approx(brute_sum.value).epsilon(1e-12));

        const auto brute_exact = brute_force_reduce<ExactMinPlusSemiring>(inst);
        const auto dp_exact = windowed_dp<ExactMinPlusSemiring>(inst);
        CHECK(brute_exact.value == dp_exact.value);
    }
}

TEST_CASE("partial cost tracks prefix energies") {
    const Instance inst = chain_instance();
    CHECK(partial_cost<MinPlusSemiring>(inst, {1, 1}) == -1.0);
    CHECK(partial_cost<MinPlusSemiring>(inst, {1, 1, 1}) == -2.0);
    CHECK(partial_cost<MinPlusSemiring>(inst, {2}) == 0.0);
    CHECK(partial_cost<MinPlusSemiring>(inst, {}) == 0.0);
}

TEST_CASE("class enumeration on the chain star") {
    const Instance inst = chain_instance();
    const auto star = star_closure(Domain(2), inst.language.predicate_set());
    const auto classes = enumerate_classes(star, 2);

    const auto find = [&](const Predicate& p) {
        for (std::size_t i = 0; i < classes.members.size(); ++i)
            if (classes.members[i] == p)
                return i;
        REQUIRE(false);
        return std::size_t{0};
    };

    // exclusive class of <{1},{1}> at length 2 is exactly {11}
    CHECK(classes.exclusive[find(simple_of(2, {{1}, {1}}))] ==
          std::vector<std::vector<Letter>>{{1, 1}});
    // every length-2 word ends in some singleton, so the top class is empty
    CHECK(classes.exclusive[find(Predicate::epsilon())].empty());

    // the exclusive classes of the carrier set partition D^2
    std::size_t covered = 0;
    for (std::size_t i = 0; i < classes.members.size(); ++i)
        covered += classes.exclusive[i].size();
    // epsilon and bottom contribute nothing here
    CHECK(covered == 4);
}

TEST_CASE("class enumeration respects the cap") {
    const auto star = star_closure(Domain(3), {simple_of(3, {{1}})});
    CHECK_THROWS_AS((void)enumerate_classes(star, 9, 100), CapacityError);
}
