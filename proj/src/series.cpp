#include "mdl/series.hpp"

#include <stdexcept>

namespace mdl::harness {

Rational Series2::get(int i, int j) const {
  if (i < 0 || j < 0 || i > x_max || j > y_max)
    throw std::out_of_range("Series2: coefficient (" + std::to_string(i) + "," +
                            std::to_string(j) + ") is beyond the truncation");
  auto it = coeffs.find({i, j});
  return it == coeffs.end() ? Rational(0) : it->second;
}

void Series2::set(int i, int j, const Rational& v) {
  if (i < 0 || j < 0 || i > x_max || j > y_max)
    throw std::out_of_range("Series2: index beyond the truncation");
  if (v == 0)
    coeffs.erase({i, j});
  else
    coeffs[{i, j}] = v;
}

Series2 Series2::add(const Series2& other) const {
  Series2 out(std::min(x_max, other.x_max), std::min(y_max, other.y_max));
  for (const auto& [ij, c] : coeffs)
    if (ij.first <= out.x_max && ij.second <= out.y_max) out.coeffs[ij] = c;
  for (const auto& [ij, c] : other.coeffs) {
    if (ij.first > out.x_max || ij.second > out.y_max) continue;
    auto [it, inserted] = out.coeffs.emplace(ij, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.coeffs.erase(it);
    }
  }
  return out;
}

Series2 Series2::mul(const Series2& other) const {
  Series2 out(std::min(x_max, other.x_max), std::min(y_max, other.y_max));
  for (const auto& [ab, c] : coeffs)
    for (const auto& [cd, d] : other.coeffs) {
      const int i = ab.first + cd.first;
      const int j = ab.second + cd.second;
      if (i > out.x_max || j > out.y_max) continue;
      auto [it, inserted] = out.coeffs.emplace(std::make_pair(i, j), c * d);
      if (!inserted) {
        it->second += c * d;
        if (it->second == 0) out.coeffs.erase(it);
      }
    }
  return out;
}

Series2 Series2::reciprocal() const {
  const Rational u0 = get(0, 0);
  if (u0 == 0)
    throw std::invalid_argument("Series2::reciprocal: constant term is zero");
  Series2 out(x_max, y_max);
  // solve (this * out)(i,j) = [i=j=0] coefficient by coefficient, in
  // increasing total degree
  for (int total = 0; total <= x_max + y_max; ++total) {
    for (int i = std::max(0, total - y_max); i <= std::min(total, x_max); ++i) {
      const int j = total - i;
      Rational acc = (i == 0 && j == 0) ? Rational(1) : Rational(0);
      for (const auto& [kl, u] : coeffs) {
        if (kl.first == 0 && kl.second == 0) continue;
        const int a = i - kl.first;
        const int b = j - kl.second;
        if (a < 0 || b < 0) continue;
        auto it = out.coeffs.find({a, b});
        if (it != out.coeffs.end()) acc -= u * it->second;
      }
      if (acc != 0) out.coeffs[{i, j}] = acc / u0;
    }
  }
  return out;
}

int o_coeff(int m) { return (m >= 3 && m % 2 == 1) ? 1 : 0; }

int s_coeff(int m) {
  if (m < 12 || m % 2 != 0) return 0;
  int count = 0;
  for (int i = 0; 4 * i <= m - 12; ++i)
    if ((m - 12 - 4 * i) % 6 == 0) ++count;
  return count;
}

Series2 hilbert_target(int x_max, int y_max) {
  if (x_max < 1 || y_max < 1)
    throw std::invalid_argument("hilbert_target: truncation orders must be >= 1");
  Series2 u(x_max, y_max);
  u.set(0, 0, 1);
  for (int m = 3; m <= x_max; ++m)
    if (o_coeff(m)) u.set(m, 1, -1);
  if (y_max >= 2)
    for (int m = 12; m <= x_max; ++m)
      if (int c = s_coeff(m)) u.set(m, 2, c);
  return u.reciprocal();
}

}  // namespace mdl::harness
