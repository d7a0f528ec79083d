#include "mdl/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdl::liealg {

std::size_t NCWord::depth() const {
  return static_cast<std::size_t>(
      std::count(letters.begin(), letters.end(), std::uint8_t{1}));
}

std::string NCWord::str() const {
  std::string out;
  out.reserve(letters.size());
  for (auto l : letters) out.push_back(l ? '1' : '0');
  return out;
}

NCWord word_from_string(const std::string& bits) {
  NCWord w;
  w.letters.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("word_from_string: bad letter in '" + bits + "'");
    w.letters.push_back(c == '1' ? 1 : 0);
  }
  return w;
}

void NCPoly::add(const NCWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms) add(w, -c);
  return *this;
}

NCPoly operator*(const Rational& c, const NCPoly& p) {
  NCPoly out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : p.terms) out.terms.emplace(w, c * coeff);
  return out;
}

int NCPoly::min_depth() const {
  int best = -1;
  for (const auto& [w, c] : terms) {
    const int d = static_cast<int>(w.depth());
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int NCPoly::homogeneous_weight() const {
  int weight = -1;
  for (const auto& [w, c] : terms) {
    const int v = static_cast<int>(w.weight());
    if (weight < 0)
      weight = v;
    else if (weight != v)
      return -1;
  }
  return weight;
}

NCPoly nc_letter(int letter) {
  NCPoly p;
  p.add(NCWord{{static_cast<std::uint8_t>(letter ? 1 : 0)}}, 1);
  return p;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) {
      NCWord w = u;
      w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
      out.add(w, cu * cv);
    }
  return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) {
  return nc_mul(a, b) - nc_mul(b, a);
}

NCPoly ihara_derivation(const NCPoly& f, const NCPoly& g) {
  NCPoly out;
  for (const auto& [w, cw] : g.terms) {
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (w.letters[i] != 1) continue;  // D_f(e0) = 0
      // replace the e1 at position i by e1*f - f*e1
      for (const auto& [u, cu] : f.terms) {
        NCWord left;  // prefix + e1 + u + suffix
        left.letters.assign(w.letters.begin(), w.letters.begin() + i + 1);
        left.letters.insert(left.letters.end(), u.letters.begin(), u.letters.end());
        left.letters.insert(left.letters.end(), w.letters.begin() + i + 1,
                            w.letters.end());
        out.add(left, cw * cu);

        NCWord right;  // prefix + u + e1 + suffix
        right.letters.assign(w.letters.begin(), w.letters.begin() + i);
        right.letters.insert(right.letters.end(), u.letters.begin(), u.letters.end());
        right.letters.insert(right.letters.end(), w.letters.begin() + i,
                             w.letters.end());
        out.add(right, -cw * cu);
      }
    }
  }
  return out;
}

NCPoly ihara_bracket(const NCPoly& f, const NCPoly& g) {
  return commutator(f, g) + ihara_derivation(f, g) - ihara_derivation(g, f);
}

NCPoly sigma_bar_word(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("sigma_bar_word: index must be odd and >= 3, got " +
                                std::to_string(m));
  NCPoly x = nc_letter(1);
  const NCPoly e0 = nc_letter(0);
  for (int i = 0; i < m - 1; ++i) x = commutator(e0, x);
  return x;
}

NCPoly depth_part(const NCPoly& p, std::size_t d) {
  NCPoly out;
  for (const auto& [w, c] : p.terms)
    if (w.depth() == d) out.terms.emplace(w, c);
  return out;
}

}  // namespace mdl::liealg
