// Exact rational scalars shared by all modules. GMP-backed; every value is
// kept in canonical form (reduced fraction, positive denominator).
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace tvgrid {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

// Parses "a/b" or "a" with an optional leading sign. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Formats as "a/b", or just "a" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace tvgrid
