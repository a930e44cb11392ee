#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bendix/errors.hpp"

namespace bendix {

// Exact arithmetic for side-length combinatorics. Everything that touches a
// wall, a polytope facet or a multiplicity count is computed with these; the
// dynamics stay in double precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or a plain decimal integer string, e.g. "3", "-7/2".
Rational parse_rational(const std::string& text);

/// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

/// Numerator of an integral rational as BigInt; throws DomainError otherwise.
BigInt to_integer(const Rational& value);

}  // namespace bendix
