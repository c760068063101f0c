#include "gpp/semiring.hpp"

namespace gpp {

const char* semiring_name(SemiringKind kind) {
    switch (kind) {
    case SemiringKind::MinPlus:
        return MinPlusSemiring::name();
    case SemiringKind::SumProd:
        return SumProdSemiring::name();
    case SemiringKind::LogSumExp:
        return LogSumExpSemiring::name();
    case SemiringKind::MinPlusExact:
        return ExactMinPlusSemiring::name();
    }
    return "";
}

SemiringKind semiring_from_name(const std::string& name) {
    if (name == "minplus")
        return SemiringKind::MinPlus;
    if (name == "sumprod")
        return SemiringKind::SumProd;
    if (name == "logsumexp")
        return SemiringKind::LogSumExp;
    if (name == "minplus_exact")
        return SemiringKind::MinPlusExact;
    throw ValidationError("unknown semiring: " + name);
}

namespace {

bool close(double a, double b, double tol) {
    if (a == b)
        return true; // covers equal infinities
    if (std::isinf(a) || std::isinf(b))
        return false;
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

} // namespace

bool MinPlusSemiring::approx_equal(Value a, Value b, double tol) { return close(a, b, tol); }
bool SumProdSemiring::approx_equal(Value a, Value b, double tol) { return close(a, b, tol); }
bool LogSumExpSemiring::approx_equal(Value a, Value b, double tol) { return close(a, b, tol); }

} // namespace gpp
