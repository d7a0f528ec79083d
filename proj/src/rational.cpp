#include "mdl/rational.hpp"

#include <stdexcept>

namespace mdl {

std::string rat_str(const Rational& x) { return x.str(); }

Rational rat_parse(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    // division canonicalizes; the string constructor of mpq does not
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rat_parse: cannot parse '" + s + "'");
  }
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace mdl
