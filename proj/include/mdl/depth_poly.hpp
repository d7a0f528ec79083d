#pragma once

#include <map>
#include <string>
#include <vector>

#include "mdl/index_set.hpp"
#include "mdl/rational.hpp"
#include "mdl/words.hpp"

namespace mdl::liealg {

// Commutative polynomial in y_0..y_depth; the polynomial representation of
// words of fixed depth. Exponent tuples have size depth+1.
struct DepthPoly {
  int depth = 0;
  std::map<std::vector<int>, Rational> terms;  // no zero coefficients stored

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<int>& expo, const Rational& c);
  Rational coefficient(const std::vector<int>& expo) const;

  DepthPoly& operator+=(const DepthPoly& other);  // depths must match
  DepthPoly& operator-=(const DepthPoly& other);
  friend DepthPoly operator+(DepthPoly a, const DepthPoly& b) { return a += b; }
  friend DepthPoly operator-(DepthPoly a, const DepthPoly& b) { return a -= b; }
  friend DepthPoly operator*(const Rational& c, const DepthPoly& p);
  bool operator==(const DepthPoly&) const = default;

  // Total degree when homogeneous; throws std::invalid_argument otherwise.
  // The zero polynomial reports degree 0.
  int homogeneous_degree() const;
};

// e0^{a0} e1 e0^{a1} ... e1 e0^{ar} -> y0^{a0} y1^{a1} ... yr^{ar}, linearly.
// Every word of p must have the same depth; mixed input is an error naming
// the two offending depths. The zero polynomial maps to zero of the given
// fallback depth.
DepthPoly rho(const NCPoly& p, int depth_if_zero = 0);

NCPoly rho_inverse(const DepthPoly& q);

// Brown's underlined circle product on polynomial representatives. The left
// factor must be homogeneous (its degree enters the sign).
DepthPoly ucirc(const DepthPoly& f, const DepthPoly& g);

// rho(sigma_bar_word(m)) = (y1 - y0)^{m-1}.
DepthPoly sigma_poly(int m);

// Right-nested chain sp(m1) ucirc (sp(m2) ucirc (... ucirc sp(mr))).
DepthPoly compose_sigma_chain(const IndexTuple& m);

// Depth-graded bracket on polynomial representatives; antisymmetrization of
// ucirc, oriented so that it matches the leading depth of the word-side
// bracket on the depth-one generators.
DepthPoly dg_bracket(const DepthPoly& f, const DepthPoly& g);

}  // namespace mdl::liealg
