#pragma once

#include <map>
#include <utility>

#include "mdl/rational.hpp"

namespace mdl::harness {

// Bivariate power series truncated at x^x_max, y^y_max (inclusive orders).
struct Series2 {
  int x_max = 0;
  int y_max = 0;
  std::map<std::pair<int, int>, Rational> coeffs;  // nonzero entries in range

  Series2() = default;
  Series2(int xm, int ym) : x_max(xm), y_max(ym) {}

  Rational get(int i, int j) const;  // throws std::out_of_range beyond truncation
  void set(int i, int j, const Rational& v);

  Series2 add(const Series2& other) const;  // truncation: componentwise min
  Series2 mul(const Series2& other) const;
  Series2 reciprocal() const;  // requires nonzero constant term

  bool operator==(const Series2&) const = default;
};

// [x^m] of x^3/(1-x^2): 1 for odd m >= 3, else 0.
int o_coeff(int m);

// [x^m] of x^12/((1-x^4)(1-x^6)): the number of ways 4i+6j = m-12.
int s_coeff(int m);

// Truncated expansion of 1/(1 - O(x) y + S(x) y^2); the coefficient of
// x^N y^r is the conjectural dimension in weight N, depth r.
Series2 hilbert_target(int x_max, int y_max);

}  // namespace mdl::harness
