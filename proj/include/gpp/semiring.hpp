#ifndef GPP_SEMIRING_HPP
#define GPP_SEMIRING_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gpp/errors.hpp"
#include "gpp/rational.hpp"

namespace gpp {

// One energy value in the canonical scale shared by every semiring; the
// exact field mirrors the decimal numeral from the instance file.
struct Energy {
    double value = 0.0;
    BigRational exact;

    Energy() = default;
    explicit Energy(double v) : value(v), exact(std::isfinite(v) ? BigRational(v) : BigRational(0)) {}
    Energy(double v, BigRational q) : value(v), exact(std::move(q)) {}
};

enum class SemiringKind { MinPlus, SumProd, LogSumExp, MinPlusExact };

const char* semiring_name(SemiringKind kind);
SemiringKind semiring_from_name(const std::string& name);

// Tropical value over exact rationals; +infinity is the additive identity.
struct ExactTropical {
    bool infinite = true;
    BigRational q;

    static ExactTropical inf() { return ExactTropical{}; }
    static ExactTropical finite(BigRational v) { return ExactTropical{false, std::move(v)}; }

    bool operator==(const ExactTropical& other) const {
        return infinite == other.infinite && (infinite || q == other.q);
    }
    bool operator<(const ExactTropical& other) const {
        if (infinite)
            return false;
        if (other.infinite)
            return true;
        return q < other.q;
    }
};

// Semirings are stateless bundles: a carrier, the two monoids, and the rule
// lifting an energy into the carrier. The four below are the instances the
// solvers dispatch over.

struct MinPlusSemiring {
    using Value = double;
    static constexpr bool idempotent_plus = true;
    static const char* name() { return "minplus"; }
    static Value zero() { return std::numeric_limits<double>::infinity(); }
    static Value one() { return 0.0; }
    static Value plus(Value a, Value b) { return a < b ? a : b; }
    static Value times(Value a, Value b) { return a + b; }
    static Value lift(const Energy& e) { return e.value; }
    static bool approx_equal(Value a, Value b, double tol);
};

struct SumProdSemiring {
    using Value = double;
    static constexpr bool idempotent_plus = false;
    static const char* name() { return "sumprod"; }
    static Value zero() { return 0.0; }
    static Value one() { return 1.0; }
    static Value plus(Value a, Value b) { return a + b; }
    static Value times(Value a, Value b) { return a * b; }
    static Value lift(const Energy& e) { return std::exp(-e.value); }
    static bool approx_equal(Value a, Value b, double tol);
};

struct LogSumExpSemiring {
    using Value = double;
    static constexpr bool idempotent_plus = false;
    static const char* name() { return "logsumexp"; }
    static Value zero() { return -std::numeric_limits<double>::infinity(); }
    static Value one() { return 0.0; }
    static Value plus(Value a, Value b) {
        if (a == zero())
            return b;
        if (b == zero())
            return a;
        const double hi = a > b ? a : b;
        const double lo = a > b ? b : a;
        return hi + std::log1p(std::exp(lo - hi));
    }
    static Value times(Value a, Value b) { return a + b; }
    static Value lift(const Energy& e) { return -e.value; }
    static bool approx_equal(Value a, Value b, double tol);
};

struct ExactMinPlusSemiring {
    using Value = ExactTropical;
    static constexpr bool idempotent_plus = true;
    static const char* name() { return "minplus_exact"; }
    static Value zero() { return ExactTropical::inf(); }
    static Value one() { return ExactTropical::finite(BigRational(0)); }
    static Value plus(const Value& a, const Value& b) { return a < b ? a : b; }
    static Value times(const Value& a, const Value& b) {
        if (a.infinite || b.infinite)
            return ExactTropical::inf();
        return ExactTropical::finite(a.q + b.q);
    }
    static Value lift(const Energy& e) { return ExactTropical::finite(e.exact); }
    static bool approx_equal(const Value& a, const Value& b, double) { return a == b; }
};

// The |D|^n-fold oplus of the multiplicative identity; the closed form used
// when a language has no predicates at all.
template <class S>
typename S::Value replicated_one(long long n, int domain_size);

template <>
inline double replicated_one<MinPlusSemiring>(long long, int) { return 0.0; }
template <>
inline double replicated_one<SumProdSemiring>(long long n, int domain_size) {
    return std::pow(static_cast<double>(domain_size), static_cast<double>(n));
}
template <>
inline double replicated_one<LogSumExpSemiring>(long long n, int domain_size) {
    return static_cast<double>(n) * std::log(static_cast<double>(domain_size));
}
template <>
inline ExactTropical replicated_one<ExactMinPlusSemiring>(long long, int) {
    return ExactMinPlusSemiring::one();
}

struct LawReport {
    bool pass = true;
    std::string witness; // first violated law, when !pass
};

// Samples all triples from `samples` and checks commutativity,
// associativity, identities, distributivity and absorption, to `tol` for
// inexact carriers.
template <class S>
LawReport check_laws(const std::vector<typename S::Value>& samples, double tol = 1e-12) {
    using V = typename S::Value;
    LawReport report;
    auto fail = [&](const std::string& law) {
        if (report.pass) {
            report.pass = false;
            report.witness = law;
        }
    };
    auto eq = [&](const V& a, const V& b) { return S::approx_equal(a, b, tol); };
    const V O = S::zero();
    const V I = S::one();
    for (const V& a : samples) {
        if (!eq(S::plus(a, O), a))
            fail("plus identity");
        if (!eq(S::times(a, I), a))
            fail("times identity");
        if (!eq(S::times(a, O), O))
            fail("zero absorbs times");
        for (const V& b : samples) {
            if (!eq(S::plus(a, b), S::plus(b, a)))
                fail("plus commutes");
            if (!eq(S::times(a, b), S::times(b, a)))
                fail("times commutes");
            for (const V& c : samples) {
                if (!eq(S::plus(S::plus(a, b), c), S::plus(a, S::plus(b, c))))
                    fail("plus associates");
                if (!eq(S::times(S::times(a, b), c), S::times(a, S::times(b, c))))
                    fail("times associates");
                if (!eq(S::times(a, S::plus(b, c)), S::plus(S::times(a, b), S::times(a, c))))
                    fail("times distributes over plus");
            }
        }
    }
    return report;
}

// Per-spec lift with finiteness validation.
template <class S>
typename S::Value lift_energy(const Energy& e) {
    if (!std::isfinite(e.value))
        throw ValidationError("energy must be finite");
    return S::lift(e);
}

} // namespace gpp

#endif
