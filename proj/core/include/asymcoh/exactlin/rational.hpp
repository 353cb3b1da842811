#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace asymcoh {

// Expression templates are disabled so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Vector = std::vector<Rational>;

/// Parses "p", "-p", "p/q" (q > 0 after sign normalisation). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list of rationals without spaces, e.g. "1,-3/2,0".
Vector parse_rational_list(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Six-significant-digit decimal rendering for human consumption only.
std::string to_decimal(const Rational& q, int significant_digits = 6);

int sign(const Rational& q);
Rational abs(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
bool is_integer(const Rational& q);

Rational dot(const Vector& a, const Vector& b);

}  // namespace asymcoh
