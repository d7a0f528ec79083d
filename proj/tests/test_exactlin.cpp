#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mdl/matq.hpp"
#include "mdl/tasaka.hpp"

using namespace mdl;
using exactlin::MatQ;
using exactlin::SubspaceBasis;

namespace {

// Independent oracle: plain rational Gaussian elimination, no Bareiss, no
// normalization. Only counts pivots.
std::size_t oracle_rank(MatQ m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(pivot, j));
    for (std::size_t i = row + 1; i < m.rows; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(row, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
    }
    ++row;
  }
  return row;
}

MatQ random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  MatQ m(rows, cols);
  for (auto& x : m.entries) x = Rational(num(rng), den(rng));
  return m;
}

MatQ random_low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols,
                     std::size_t rank) {
  return exactlin::mat_mul(random_matrix(rng, rows, rank),
                           random_matrix(rng, rank, cols));
}

bool is_rref(const MatQ& m) {
  std::size_t last_pivot = 0;
  bool seen = false;
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::size_t j = 0;
    while (j < m.cols && m(i, j) == 0) ++j;
    if (j == m.cols) return false;  // basis rows must be nonzero
    if (m(i, j) != 1) return false;
    if (seen && j <= last_pivot) return false;
    for (std::size_t k = 0; k < m.rows; ++k)
      if (k != i && m(k, j) != 0) return false;
    last_pivot = j;
    seen = true;
  }
  return true;
}

}  // namespace

TEST_CASE("rank_exact on trivial cases") {
  CHECK(exactlin::rank_exact(MatQ::identity(2)) == 2);
  CHECK(exactlin::rank_exact(MatQ(3, 4)) == 0);
  CHECK(exactlin::rank_exact(MatQ()) == 0);
}

TEST_CASE("rank of E_{12,2} is 3, cross-checked by brute-force elimination") {
  const auto e = tasaka::build_E(12, 2, 2);
  REQUIRE(e.mat.rows == 4);
  CHECK(oracle_rank(e.mat) == 3);
  CHECK(exactlin::rank_exact(e.mat) == 3);
}

TEST_CASE("left kernel basics") {
  CHECK(exactlin::left_kernel_basis(MatQ::identity(4)).dimension() == 0);

  const auto e12 = tasaka::build_E(12, 2, 2);
  const auto k12 = exactlin::left_kernel_basis(e12.mat);
  CHECK(k12.dimension() == 1);
  CHECK(is_rref(k12.vectors));
  // v * E = 0 for every basis vector
  CHECK(exactlin::mat_mul(k12.vectors, e12.mat).is_zero());

  // e((3,3);(3,3)) = 1 + b^3_{3,3} = 1, so E_{6,2} = [1]
  const auto e6 = tasaka::build_E(6, 2, 2);
  REQUIRE(e6.mat.rows == 1);
  CHECK(e6.mat(0, 0) == 1);
  CHECK(exactlin::left_kernel_basis(e6.mat).dimension() == 0);
}

TEST_CASE("row space basis") {
  const auto id = exactlin::row_space_basis(MatQ::identity(3));
  CHECK(id.dimension() == 3);
  CHECK(id.vectors == MatQ::identity(3));
  CHECK(exactlin::row_space_basis(MatQ(2, 5)).dimension() == 0);

  const auto c = tasaka::build_C(12, 2);
  CHECK(exactlin::row_space_basis(c.mat).dimension() == 3);
}

TEST_CASE("mat_mul identities and the C_{18,3} product") {
  std::mt19937 rng(7);
  const MatQ m = random_matrix(rng, 4, 6);
  CHECK(exactlin::mat_mul(MatQ::identity(4), m) == m);
  CHECK(exactlin::mat_mul(m, MatQ(6, 3)).is_zero());
  CHECK_THROWS_AS(exactlin::mat_mul(MatQ(2, 3), MatQ(2, 3)),
                  std::invalid_argument);

  // entry-by-entry dot products, independent of mat_mul
  const auto e2 = tasaka::build_E(18, 3, 2);
  const auto e3 = tasaka::build_E(18, 3, 3);
  const auto c = exactlin::mat_mul(e2.mat, e3.mat);
  REQUIRE(c.rows == e2.mat.rows);
  for (std::size_t i = 0; i < c.rows; ++i)
    for (std::size_t j = 0; j < c.cols; ++j) {
      Rational dot = 0;
      for (std::size_t k = 0; k < c.rows; ++k) dot += e2.mat(i, k) * e3.mat(k, j);
      CHECK(c(i, j) == dot);
    }
  CHECK(c == tasaka::build_C(18, 3).mat);
}

TEST_CASE("rank_exact agrees with the oracle on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    MatQ m = trial % 2 == 0
                 ? random_matrix(rng, rows, cols)
                 : random_low_rank(rng, rows, cols, 1 + std::min(rows, cols) / 2);
    const std::size_t rank = exactlin::rank_exact(m);
    CHECK(rank == oracle_rank(m));

    const auto kernel = exactlin::left_kernel_basis(m);
    CHECK(rank + kernel.dimension() == m.rows);
    if (kernel.dimension() > 0) {
      CHECK(is_rref(kernel.vectors));
      CHECK(exactlin::mat_mul(kernel.vectors, m).is_zero());
    }

    // re-reduction is the identity on an already reduced basis
    MatQ again = kernel.vectors;
    exactlin::rref_in_place(again);
    CHECK(again == kernel.vectors);
  }
}

TEST_CASE("product rank bound") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const MatQ a = random_matrix(rng, 5, 4);
    const MatQ b = random_matrix(rng, 4, 6);
    const std::size_t ra = exactlin::rank_exact(a);
    const std::size_t rb = exactlin::rank_exact(b);
    CHECK(exactlin::rank_exact(exactlin::mat_mul(a, b)) <= std::min(ra, rb));
  }
}

TEST_CASE("left kernel under column and row permutations") {
  std::mt19937 rng(5);
  const MatQ m = random_low_rank(rng, 6, 5, 3);
  const auto kernel = exactlin::left_kernel_basis(m);
  REQUIRE(kernel.dimension() > 0);

  // permuting columns leaves the left kernel untouched
  MatQ mc(m.rows, m.cols);
  const std::size_t perm_c[] = {4, 2, 0, 1, 3};
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) mc(i, j) = m(i, perm_c[j]);
  CHECK(exactlin::left_kernel_basis(mc).vectors == kernel.vectors);

  // permuting rows permutes kernel coordinates the same way
  MatQ mr(m.rows, m.cols);
  const std::size_t perm_r[] = {3, 5, 1, 0, 4, 2};
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) mr(i, j) = m(perm_r[i], j);
  const auto kernel_r = exactlin::left_kernel_basis(mr);
  MatQ mapped(kernel.dimension(), m.rows);
  for (std::size_t i = 0; i < kernel.dimension(); ++i)
    for (std::size_t j = 0; j < m.rows; ++j)
      mapped(i, j) = kernel.vectors(i, perm_r[j]);
  exactlin::rref_in_place(mapped);
  CHECK(exactlin::same_row_space(kernel_r,
                                 SubspaceBasis{m.rows, std::move(mapped)}));
}

TEST_CASE("modular rank certification") {
  const auto primes = exactlin::draw_primes(3, 0);
  REQUIRE(primes.size() == 3);
  for (auto p : primes) CHECK(p > (1ull << 31));

  const auto id5 = exactlin::rank_modular(MatQ::identity(5), primes);
  CHECK(id5.rank == 5);
  CHECK(id5.method == exactlin::RankCertificate::Method::modular);
  CHECK(id5.primes == primes);

  const auto e12 = tasaka::build_E(12, 2, 2);
  CHECK(exactlin::rank_modular(e12.mat, primes).rank == 3);

  // seeded stream is deterministic and re-drawable
  CHECK(exactlin::draw_primes(3, 0) == primes);
  CHECK(exactlin::draw_primes(3, 0, 3) != primes);
}

TEST_CASE("modular rank matches exact rank on the desk-scale corpus") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const MatQ m = trial % 2 == 0 ? random_matrix(rng, 6, 6)
                                  : random_low_rank(rng, 7, 5, 2);
    CHECK(exactlin::rank_modular_auto(m, 1).rank == exactlin::rank_exact(m));
  }
  const auto c244 = tasaka::build_C(24, 4);
  REQUIRE(c244.mat.rows == 84);
  CHECK(exactlin::rank_modular_auto(c244.mat, 0).rank ==
        exactlin::rank_exact(c244.mat));
}

TEST_CASE("modular rank error paths") {
  const auto primes = exactlin::draw_primes(3, 0);
  CHECK_THROWS_AS(
      exactlin::rank_modular(MatQ::identity(2), {primes[0], primes[1]}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      exactlin::rank_modular(MatQ::identity(2), {primes[0], primes[0], primes[1]}),
      std::invalid_argument);
  CHECK_THROWS_AS(exactlin::rank_modular(MatQ::identity(2), {3, 5, 7}),
                  std::invalid_argument);

  MatQ bad(1, 1);
  bad(0, 0) = Rational(1) / Rational(Integer(primes[0]));
  CHECK_THROWS_AS(exactlin::rank_modular(bad, primes),
                  exactlin::PrimeUnusableError);
  // the auto variant re-draws past the unusable prime
  CHECK(exactlin::rank_modular_auto(bad, 0).rank == 1);
}
