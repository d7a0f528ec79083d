#include "mdl/tasaka.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mdl::tasaka {

namespace {

std::atomic<std::uint64_t> g_build_count{0};

int parity_sign(int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

// Rows are filled concurrently; every cell is a pure function of its indices
// and rows write disjoint memory, so the result is schedule-independent.
template <typename Fn>
void for_each_row(std::size_t n, Fn&& fill_row) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (n < 64 || hw < 2) {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
    return;
  }
  const unsigned workers = std::min(hw, 8u);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        fill_row(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::uint64_t matrix_build_count() { return g_build_count.load(); }

Rational b_coeff(int m, int n, int n2) {
  if (m < 1 || n < 1 || n2 < 1)
    throw std::invalid_argument("b_coeff: indices must be >= 1");
  Integer value = parity_sign(n) * binomial(m - 1, n - 1) +
                  parity_sign(n2 - m) * binomial(m - 1, n2 - 1);
  return Rational(value);
}

Rational e_entry(const IndexTuple& m, const IndexTuple& n) {
  const int r = m.depth();
  if (r != n.depth())
    throw std::invalid_argument("e_entry: tuple lengths differ (" + m.str() +
                                " vs " + n.str() + ")");
  if (r < 1) throw std::invalid_argument("e_entry: empty tuples");

  Rational value = (m == n) ? 1 : 0;
  for (int i = 1; i <= r - 1; ++i) {
    // delta(m_2..m_i, m_{i+2}..m_r ; n_1..n_{i-1}, n_{i+2}..n_r)
    bool match = true;
    for (int t = 2; t <= i && match; ++t) match = m.parts[t - 1] == n.parts[t - 2];
    for (int t = i + 2; t <= r && match; ++t) match = m.parts[t - 1] == n.parts[t - 1];
    if (!match) continue;
    value += b_coeff(m.parts[0], n.parts[i - 1], n.parts[i]);
  }
  return value;
}

std::string kind_str(MatrixKind k) {
  switch (k) {
    case MatrixKind::E: return "E";
    case MatrixKind::C: return "C";
    case MatrixKind::EtaTilde: return "EtaTilde";
  }
  throw std::logic_error("kind_str: bad kind");
}

MatrixKind kind_parse(const std::string& s) {
  if (s == "E") return MatrixKind::E;
  if (s == "C") return MatrixKind::C;
  if (s == "EtaTilde") return MatrixKind::EtaTilde;
  throw std::invalid_argument("unknown matrix kind '" + s + "'");
}

TasakaMatrix build_E(int N, int r, int k) {
  if (k < 2 || k > r)
    throw std::invalid_argument("build_E: level must satisfy 2 <= k <= depth, got k=" +
                                std::to_string(k) + ", depth=" + std::to_string(r));
  ++g_build_count;
  IndexSet index = liealg::enumerate_index_set(N, r);
  const std::size_t n = index.size();
  const int fixed = r - k;
  MatQ mat(n, n);
  for_each_row(n, [&](std::size_t row) {
    const IndexTuple& mt = index.tuples[row];
    for (std::size_t col = 0; col < n; ++col) {
      const IndexTuple& nt = index.tuples[col];
      bool match = true;
      for (int t = 0; t < fixed && match; ++t) match = mt.parts[t] == nt.parts[t];
      if (!match) continue;
      IndexTuple m_tail{{mt.parts.begin() + fixed, mt.parts.end()}};
      IndexTuple n_tail{{nt.parts.begin() + fixed, nt.parts.end()}};
      mat(row, col) = e_entry(m_tail, n_tail);
    }
  });
  return TasakaMatrix{N, r, MatrixKind::E, k, std::move(index), std::move(mat)};
}

MatQ e_product(int N, int r, int k_hi) {
  MatQ acc = build_E(N, r, 2).mat;
  for (int k = 3; k <= k_hi; ++k) acc = exactlin::mat_mul(acc, build_E(N, r, k).mat);
  return acc;
}

TasakaMatrix build_C(int N, int r) {
  if (r < 1) throw std::invalid_argument("build_C: depth must be >= 1");
  IndexSet index = liealg::enumerate_index_set(N, r);
  if (r == 1) {
    ++g_build_count;
    MatQ mat(index.size(), index.size());
    if (index.size() == 1) mat(0, 0) = 1;
    return TasakaMatrix{N, r, MatrixKind::C, 0, std::move(index), std::move(mat)};
  }
  if (index.size() == 0) {
    ++g_build_count;
    return TasakaMatrix{N, r, MatrixKind::C, 0, std::move(index), MatQ()};
  }
  MatQ mat = e_product(N, r, r);
  ++g_build_count;
  return TasakaMatrix{N, r, MatrixKind::C, 0, std::move(index), std::move(mat)};
}

TasakaMatrix build_eta_tilde(int N, int r) {
  if (r < 2) throw std::invalid_argument("build_eta_tilde: depth must be >= 2");
  ++g_build_count;
  IndexSet index = liealg::enumerate_index_set(N, r);
  const std::size_t n = index.size();
  MatQ mat(n, n);
  for_each_row(n, [&](std::size_t row) {
    const IndexTuple& mt = index.tuples[row];
    for (std::size_t col = 0; col < n; ++col) {
      const IndexTuple& nt = index.tuples[col];
      if (mt.parts[0] != nt.parts[0]) continue;
      IndexTuple m_tail{{mt.parts.begin() + 1, mt.parts.end()}};
      IndexTuple n_tail{{nt.parts.begin() + 1, nt.parts.end()}};
      mat(row, col) = e_entry(m_tail, n_tail);
    }
  });
  return TasakaMatrix{N, r, MatrixKind::EtaTilde, 0, std::move(index), std::move(mat)};
}

}  // namespace mdl::tasaka
