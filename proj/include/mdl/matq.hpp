#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mdl/rational.hpp"

namespace mdl::exactlin {

// Dense row-major rational matrix. All operations on it are exact.
struct MatQ {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;  // rows * cols, row-major

  MatQ() = default;
  MatQ(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Rational& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }

  static MatQ identity(std::size_t n);
  bool is_zero() const;
  bool operator==(const MatQ&) const = default;
};

// Rows form a reduced echelon basis (unit pivots, rows ordered by pivot
// position) of a subspace of Q^ambient. Left/row spaces throughout.
struct SubspaceBasis {
  std::size_t ambient = 0;
  MatQ vectors;  // vectors.cols == ambient, vectors.rows == dimension

  std::size_t dimension() const { return vectors.rows; }
};

struct RankCertificate {
  enum class Method { exact, modular };

  std::size_t rank = 0;
  Method method = Method::exact;
  std::vector<std::uint64_t> primes;  // empty for exact
};

// Raised when a chosen prime divides the denominator of some entry; the
// caller is expected to re-draw primes and retry.
struct PrimeUnusableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// In-place Gauss-Jordan reduction; returns the rank. Pivots are chosen
// deterministically (leftmost column, first nonzero row).
std::size_t rref_in_place(MatQ& m);

// Rank by fraction-free (Bareiss) elimination on a denominator-cleared copy.
std::size_t rank_exact(const MatQ& m);

// Basis of { v : v * m = 0 }; kernels are row-vector kernels throughout,
// matching the a -> aP action convention.
SubspaceBasis left_kernel_basis(const MatQ& m);

// Reduced basis of the span of the rows of m.
SubspaceBasis row_space_basis(const MatQ& m);

// Exact product; throws std::invalid_argument on incompatible shapes.
MatQ mat_mul(const MatQ& a, const MatQ& b);

// Rank of m modulo each of the given primes (distinct, each > 2^31). All
// residual ranks must agree; disagreement is an error, never a silent pick.
RankCertificate rank_modular(const MatQ& m, const std::vector<std::uint64_t>& primes);

// Deterministic stream of distinct 62-bit primes derived from `seed`,
// skipping the first `skip` primes of the stream.
std::vector<std::uint64_t> draw_primes(std::size_t count, std::uint64_t seed,
                                       std::size_t skip = 0);

// rank_modular with 3 primes drawn from `seed`, re-drawing on unusable primes.
RankCertificate rank_modular_auto(const MatQ& m, std::uint64_t seed);

MatQ stack_rows(const MatQ& a, const MatQ& b);

// Equality of spanned subspaces via mutual containment (rank of the stack).
bool same_row_space(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace mdl::exactlin
