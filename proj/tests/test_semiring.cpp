#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "gpp/semiring.hpp"

using namespace gpp;

TEST_CASE("lift rules") {
    CHECK(lift_energy<MinPlusSemiring>(Energy(-1.0)) == -1.0);
    CHECK(lift_energy<SumProdSemiring>(Energy(0.0)) == 1.0);
    CHECK(lift_energy<SumProdSemiring>(Energy(std::log(2.0))) == doctest::Approx(0.5));
    CHECK(lift_energy<LogSumExpSemiring>(Energy(3.0)) == -3.0);

    const Energy half(0.5, BigRational(1, 2));
    CHECK(lift_energy<ExactMinPlusSemiring>(half).q == BigRational(1, 2));

    CHECK_THROWS_AS(lift_energy<MinPlusSemiring>(
                        Energy(std::numeric_limits<double>::infinity())),
                    ValidationError);
}

TEST_CASE("identities") {
    CHECK(MinPlusSemiring::zero() == std::numeric_limits<double>::infinity());
    CHECK(MinPlusSemiring::one() == 0.0);
    CHECK(MinPlusSemiring::idempotent_plus);
    CHECK(SumProdSemiring::zero() == 0.0);
    CHECK(SumProdSemiring::one() == 1.0);
    CHECK_FALSE(SumProdSemiring::idempotent_plus);
    CHECK(LogSumExpSemiring::zero() == -std::numeric_limits<double>::infinity());
    CHECK(LogSumExpSemiring::one() == 0.0);
    CHECK(ExactMinPlusSemiring::zero().infinite);
    CHECK(ExactMinPlusSemiring::one().q == 0);
}

TEST_CASE("log-scale plus matches the linear scale") {
    const double a = std::log(0.3);
    const double b = std::log(1.7);
    CHECK(LogSumExpSemiring::plus(a, b) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(LogSumExpSemiring::plus(LogSumExpSemiring::zero(), a) == a);

    // stays stable far outside the range exp can represent
    const double huge = 800.0;
    CHECK(LogSumExpSemiring::plus(huge, huge) == doctest::Approx(huge + std::log(2.0)));
}

TEST_CASE("law harness passes on the stock semirings") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(check_laws<MinPlusSemiring>({0.0, -1.0, 3.0, inf}).pass);
    CHECK(check_laws<SumProdSemiring>({0.0, 1.0, 0.5, 2.0}).pass);
    CHECK(check_laws<LogSumExpSemiring>({-inf, 0.0, std::log(0.5), 1.0}, 1e-9).pass);
    CHECK(check_laws<ExactMinPlusSemiring>({ExactTropical::inf(),
                                            ExactTropical::finite(BigRational(0)),
                                            ExactTropical::finite(BigRational(-3)),
                                            ExactTropical::finite(BigRational(7, 2))})
              .pass);
}

namespace {

// oplus = minus: breaks commutativity and the identity laws
struct BrokenSemiring {
    using Value = double;
    static constexpr bool idempotent_plus = false;
    static Value zero() { return 0.0; }
    static Value one() { return 1.0; }
    static Value plus(Value a, Value b) { return a - b; }
    static Value times(Value a, Value b) { return a * b; }
    static Value lift(const Energy& e) { return e.value; }
    static bool approx_equal(Value a, Value b, double tol) {
        return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
    }
};

} // namespace

TEST_CASE("law harness rejects a broken oplus") {
    const LawReport report = check_laws<BrokenSemiring>({0.0, 1.0, 2.0});
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.witness.empty());
}

TEST_CASE("replicated one") {
    CHECK(replicated_one<MinPlusSemiring>(5, 2) == 0.0);
    CHECK(replicated_one<SumProdSemiring>(3, 2) == 8.0);
    CHECK(replicated_one<LogSumExpSemiring>(3, 2) == doctest::Approx(3 * std::log(2.0)));
    CHECK(replicated_one<ExactMinPlusSemiring>(4, 3).q == 0);
}

TEST_CASE("exact tropical ordering") {
    const auto inf = ExactTropical::inf();
    const auto zero = ExactTropical::finite(BigRational(0));
    const auto neg = ExactTropical::finite(BigRational(-5, 4));
    CHECK(neg < zero);
    CHECK(zero < inf);
    CHECK_FALSE(inf < zero);
    CHECK(ExactMinPlusSemiring::plus(inf, neg) == neg);
    CHECK(ExactMinPlusSemiring::times(neg, zero) == neg);
    CHECK(ExactMinPlusSemiring::times(inf, neg).infinite);
}

TEST_CASE("decimal rationals") {
    CHECK(parse_decimal_rational("0.1") == BigRational(1, 10));
    CHECK(parse_decimal_rational("-2.5e3") == BigRational(-2500));
    CHECK(parse_decimal_rational("7") == BigRational(7));
    CHECK(parse_decimal_rational("1e-3") == BigRational(1, 1000));
    CHECK_THROWS_AS(parse_decimal_rational("abc"), ValidationError);
    CHECK_THROWS_AS(parse_decimal_rational("1.2.3"), ValidationError);
}
