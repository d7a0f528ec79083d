#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mdl/rational.hpp"

namespace mdl::liealg {

// Word over the alphabet {e0, e1}. Weight is the length, depth the number
// of e1 letters.
struct NCWord {
  std::vector<std::uint8_t> letters;  // 0 = e0, 1 = e1

  std::size_t weight() const { return letters.size(); }
  std::size_t depth() const;
  std::string str() const;  // e.g. "01001"; empty word -> "1" is NOT used, "" stays ""

  auto operator<=>(const NCWord&) const = default;
};

NCWord word_from_string(const std::string& bits);  // inverse of str()

// Noncommutative polynomial in e0, e1. Not required to be homogeneous in
// weight or depth; the full Ihara bracket mixes depths.
struct NCPoly {
  std::map<NCWord, Rational> terms;  // no zero coefficients stored

  bool is_zero() const { return terms.empty(); }
  void add(const NCWord& w, const Rational& c);

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const Rational& c, const NCPoly& p);
  bool operator==(const NCPoly&) const = default;

  // Smallest depth among the words; -1 for the zero polynomial.
  int min_depth() const;
  // Homogeneous weight, or -1 if mixed / zero.
  int homogeneous_weight() const;
};

NCPoly nc_letter(int letter);  // 0 -> e0, 1 -> e1
NCPoly nc_mul(const NCPoly& a, const NCPoly& b);  // concatenation product
NCPoly commutator(const NCPoly& a, const NCPoly& b);

// The derivation D_f: e0 -> 0, e1 -> [e1, f], extended by Leibniz over words.
NCPoly ihara_derivation(const NCPoly& f, const NCPoly& g);

// {f, g} = [f, g] + D_f(g) - D_g(f).
NCPoly ihara_bracket(const NCPoly& f, const NCPoly& g);

// (ad e0)^{m-1}(e1), fully expanded; weight m, depth 1. Requires m odd >= 3.
NCPoly sigma_bar_word(int m);

// The part of p of e1-degree exactly d.
NCPoly depth_part(const NCPoly& p, std::size_t d);

}  // namespace mdl::liealg
