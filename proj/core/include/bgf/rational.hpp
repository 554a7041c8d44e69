#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace bgf {

/// Exact rational arithmetic (GMP mpq) with value semantics; expression
/// templates are disabled so `auto` captures a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p/q" or "p" (optional leading '-'); q must be positive.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with a "/1" denominator.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

Rational pow(const Rational& base, int exponent);

}  // namespace bgf
