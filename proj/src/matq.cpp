#include "mdl/matq.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

namespace mdl::exactlin {

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool MatQ::is_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Rational& x) { return x == 0; });
}

std::size_t rref_in_place(MatQ& m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(pivot, j));
    const Rational inv = m(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) /= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= factor * m(row, j);
    }
    ++row;
  }
  return row;
}

std::size_t rank_exact(const MatQ& m) {
  if (m.rows == 0 || m.cols == 0) return 0;

  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<Integer>> a(m.rows, std::vector<Integer>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols; ++j)
      l = lcm(l, denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols; ++j)
      a[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }

  // Bareiss: after each step the entries are minors of the original matrix,
  // so the division by the previous pivot is exact.
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row) std::swap(a[pivot], a[row]);
    for (std::size_t i = row + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j)
        a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

SubspaceBasis left_kernel_basis(const MatQ& m) {
  const std::size_t n = m.rows;
  // Reduce [m | I]; rows whose m-part vanishes record the row operations
  // that produced them, i.e. left-kernel vectors.
  MatQ aug(n, m.cols + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols + i) = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && aug(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < aug.cols; ++j) std::swap(aug(row, j), aug(pivot, j));
    const Rational inv = aug(row, col);
    for (std::size_t j = 0; j < aug.cols; ++j) aug(row, j) /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      const Rational factor = aug(i, col);
      for (std::size_t j = 0; j < aug.cols; ++j) aug(i, j) -= factor * aug(row, j);
    }
    ++row;
  }
  MatQ ker(n - row, n);
  for (std::size_t i = row; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ker(i - row, j) = aug(i, m.cols + j);
  rref_in_place(ker);
  return SubspaceBasis{n, std::move(ker)};
}

SubspaceBasis row_space_basis(const MatQ& m) {
  MatQ red = m;
  const std::size_t rank = rref_in_place(red);
  MatQ basis(rank, m.cols);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) basis(i, j) = red(i, j);
  return SubspaceBasis{m.cols, std::move(basis)};
}

MatQ mat_mul(const MatQ& a, const MatQ& b) {
  if (a.cols != b.rows) {
    std::ostringstream msg;
    msg << "mat_mul: incompatible shapes " << a.rows << "x" << a.cols << " * "
        << b.rows << "x" << b.cols;
    throw std::invalid_argument(msg.str());
  }
  MatQ c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        if (b(k, j) == 0) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t out = 1;
  a %= p;
  while (e) {
    if (e & 1) out = mulmod(out, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return out;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t residue_mod(const Integer& z, std::uint64_t p) {
  Integer r = z % Integer(p);
  if (r < 0) r += Integer(p);
  return r.convert_to<std::uint64_t>();
}

std::size_t rank_mod_p(const MatQ& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows,
                                            std::vector<std::uint64_t>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      const std::uint64_t den = residue_mod(denominator(m(i, j)), p);
      if (den == 0) {
        std::ostringstream msg;
        msg << "rank_modular: prime " << p << " divides the denominator of entry ("
            << i << "," << j << "); re-draw primes";
        throw PrimeUnusableError(msg.str());
      }
      const std::uint64_t num = residue_mod(numerator(m(i, j)), p);
      a[i][j] = mulmod(num, powmod(den, p - 2, p), p);
    }

  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row) std::swap(a[pivot], a[row]);
    const std::uint64_t inv = powmod(a[row][col], p - 2, p);
    for (std::size_t i = row + 1; i < m.rows; ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t f = mulmod(a[i][col], inv, p);
      for (std::size_t j = col; j < m.cols; ++j) {
        const std::uint64_t sub = mulmod(f, a[row][j], p);
        a[i][j] = (a[i][j] + p - sub) % p;
      }
    }
    ++row;
  }
  return row;
}

}  // namespace

RankCertificate rank_modular(const MatQ& m, const std::vector<std::uint64_t>& primes) {
  if (primes.size() < 3)
    throw std::invalid_argument("rank_modular: at least 3 primes required");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] <= (1ull << 31) || !is_prime_u64(primes[i]))
      throw std::invalid_argument("rank_modular: primes must be primes > 2^31");
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      if (primes[i] == primes[j])
        throw std::invalid_argument("rank_modular: primes must be distinct");
  }
  std::vector<std::size_t> ranks;
  ranks.reserve(primes.size());
  for (std::uint64_t p : primes) ranks.push_back(rank_mod_p(m, p));
  for (std::size_t i = 1; i < ranks.size(); ++i) {
    if (ranks[i] != ranks[0]) {
      std::ostringstream msg;
      msg << "rank_modular: residual ranks disagree:";
      for (std::size_t j = 0; j < primes.size(); ++j)
        msg << " mod " << primes[j] << " -> " << ranks[j];
      throw std::runtime_error(msg.str());
    }
  }
  return RankCertificate{ranks[0], RankCertificate::Method::modular, primes};
}

std::vector<std::uint64_t> draw_primes(std::size_t count, std::uint64_t seed,
                                       std::size_t skip) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::uint64_t> out;
  std::size_t skipped = 0;
  while (out.size() < count) {
    std::uint64_t candidate = (rng() | 1ull) % (1ull << 62);
    if (candidate <= (1ull << 61)) candidate += (1ull << 61);
    if (!is_prime_u64(candidate)) continue;
    if (std::find(out.begin(), out.end(), candidate) != out.end()) continue;
    if (skipped < skip) {
      ++skipped;
      continue;
    }
    out.push_back(candidate);
  }
  return out;
}

RankCertificate rank_modular_auto(const MatQ& m, std::uint64_t seed) {
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > 64)
      throw std::runtime_error("rank_modular_auto: could not find usable primes");
    try {
      return rank_modular(m, draw_primes(3, seed, 3 * attempt));
    } catch (const PrimeUnusableError&) {
      continue;
    }
  }
}

MatQ stack_rows(const MatQ& a, const MatQ& b) {
  if (a.cols != b.cols && a.rows != 0 && b.rows != 0)
    throw std::invalid_argument("stack_rows: column mismatch");
  const std::size_t cols = a.rows != 0 ? a.cols : b.cols;
  MatQ out(a.rows + b.rows, cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(a.rows + i, j) = b(i, j);
  return out;
}

bool same_row_space(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient != b.ambient) return false;
  if (a.dimension() != b.dimension()) return false;
  return rank_exact(stack_rows(a.vectors, b.vectors)) == a.dimension();
}

}  // namespace mdl::exactlin
