#ifndef GPP_RATIONAL_HPP
#define GPP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>

#include "gpp/errors.hpp"

namespace gpp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Parses a decimal numeral (optionally signed, with fraction and exponent,
// e.g. "-2.5e3") into an exact rational. This is how instance energies enter
// the exact carrier: 0.1 becomes 1/10, not the nearest double.
inline BigRational parse_decimal_rational(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    BigInt mantissa = 0;
    long long scale = 0; // count of fractional digits
    bool any_digit = false;
    for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        mantissa = mantissa * 10 + (text[i] - '0');
        any_digit = true;
    }
    if (i < n && text[i] == '.') {
        ++i;
        for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            mantissa = mantissa * 10 + (text[i] - '0');
            ++scale;
            any_digit = true;
        }
    }
    long long exponent = 0;
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            exp_neg = text[i] == '-';
            ++i;
        }
        bool exp_digit = false;
        for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            exponent = exponent * 10 + (text[i] - '0');
            exp_digit = true;
        }
        if (!exp_digit)
            throw ValidationError("malformed exponent in decimal numeral: " + text);
        if (exp_neg)
            exponent = -exponent;
    }
    if (!any_digit || i != n)
        throw ValidationError("malformed decimal numeral: " + text);

    const long long shift = exponent - scale;
    BigRational value(mantissa, 1);
    if (shift > 0) {
        BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift));
        value *= BigRational(p, 1);
    } else if (shift < 0) {
        BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-shift));
        value /= BigRational(p, 1);
    }
    return negative ? BigRational(-value) : value;
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

} // namespace gpp

#endif
