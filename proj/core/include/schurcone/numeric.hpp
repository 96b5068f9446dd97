#ifndef SCHURCONE_NUMERIC_HPP
#define SCHURCONE_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace schurcone {

// All cone arithmetic is exact: integer coefficients are arbitrary
// precision, inner products and LP pivots are exact rationals.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Decimal rendering: integers as "-12", rationals as "p/q" (or "p" when
// the denominator is 1). This is the only numeric text form we emit.
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& text);

// Smallest integer >= q.
Integer rational_ceil(const Rational& q);

}  // namespace schurcone

#endif  // SCHURCONE_NUMERIC_HPP
