#pragma once

#include <cstdint>
#include <string>

#include "mdl/index_set.hpp"
#include "mdl/matq.hpp"
#include "mdl/rational.hpp"

namespace mdl::tasaka {

using exactlin::MatQ;
using liealg::IndexSet;
using liealg::IndexTuple;

// b^m_{n,n'} = (-1)^n C(m-1,n-1) + (-1)^{n'-m} C(m-1,n'-1). Integer-valued.
Rational b_coeff(int m, int n, int n2);

// e(m;n) = delta(m;n) + sum_{i=1}^{r-1} delta(reduced tuples) b^{m1}_{n_i,n_{i+1}}.
// For r = 1 the sum is empty and e = delta. Tuples must have equal length.
Rational e_entry(const IndexTuple& m, const IndexTuple& n);

enum class MatrixKind { E, C, EtaTilde };
std::string kind_str(MatrixKind k);
MatrixKind kind_parse(const std::string& s);

// Square integer matrix over S_{N,r} in canonical order, acting on row
// vectors from the right.
struct TasakaMatrix {
  int weight = 0;
  int depth = 0;
  MatrixKind kind = MatrixKind::E;
  int level = 0;  // k for kind E (2 <= k <= depth); 0 otherwise
  IndexSet index;
  MatQ mat;
};

// E^{(k)}_{N,r}: fixes the leading r-k indices by a delta factor and applies
// e on the trailing k. build_E(N, r, r) is the full matrix E_{N,r}.
TasakaMatrix build_E(int N, int r, int k);

// C_{N,r} = E^{(2)} E^{(3)} ... E^{(r)}; single factor E_{N,2} at r = 2; the
// 1x1 matrix [1] at r = 1 (empty S_{N,r} gives the 0x0 matrix).
TasakaMatrix build_C(int N, int r);

// Block-diagonal matrix with entries delta(m1;n1) e(m2..mr;n2..nr).
TasakaMatrix build_eta_tilde(int N, int r);

// Left-to-right product E^{(2)} ... E^{(k_hi)}, 2 <= k_hi <= r.
MatQ e_product(int N, int r, int k_hi);

// Number of Tasaka matrices constructed so far (cache instrumentation).
std::uint64_t matrix_build_count();

}  // namespace mdl::tasaka
