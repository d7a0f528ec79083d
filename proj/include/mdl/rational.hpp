#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace mdl {

using Integer = boost::multiprecision::mpz_int;

// Arbitrary-precision fraction, always in lowest terms with positive
// denominator (maintained by the GMP backend).
using Rational = boost::multiprecision::mpq_rational;

// Canonical text form: "p/q" in lowest terms, "/q" omitted when q == 1.
std::string rat_str(const Rational& x);

// Accepts "p" or "p/q"; result is canonicalized. Throws std::invalid_argument.
Rational rat_parse(const std::string& s);

// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

}  // namespace mdl
