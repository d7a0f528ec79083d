#pragma once

#include <map>
#include <vector>

#include "mdl/matq.hpp"
#include "mdl/rational.hpp"
#include "mdl/tasaka.hpp"

namespace mdl::tasaka {

// Sparse polynomial in x_1..x_r as exponent vector -> coefficient.
using XPoly = std::map<std::vector<int>, Rational>;

XPoly xp_add(const XPoly& a, const XPoly& b);
XPoly xp_sub(const XPoly& a, const XPoly& b);
XPoly xp_scale(const Rational& c, const XPoly& a);
XPoly xp_mul(const XPoly& a, const XPoly& b);
XPoly xp_pow(const XPoly& a, int e);
// Substitute args[k] for variable k; args polynomials share one variable set.
XPoly xp_compose(const XPoly& p, const std::vector<XPoly>& args);

// Reduced basis of the space of restricted even period polynomials of
// weight N: homogeneous degree N-2, p(x1,0)=0, even in each variable,
// p(x1,x2) + p(x1-x2,x1) - p(x1-x2,x2) = 0.
struct BivarPolySpace {
  int weight = 0;
  std::vector<XPoly> basis;
  std::size_t dimension() const { return basis.size(); }
};

BivarPolySpace period_basis(int N);

// Reduced basis of W_{N,r}: polynomials in the S_{N,r} monomial span with
// p(x1,...,xr) = p(x2-x1,x2,x3,...,xr) - p(x2-x1,x1,x3,...,xr).
struct MultivarPolySpace {
  int weight = 0;
  int depth = 0;
  std::vector<XPoly> basis;
  std::size_t dimension() const { return basis.size(); }
};

MultivarPolySpace w_basis(int N, int r);

// Coordinates with respect to S_{N,r} in canonical order.
struct CoeffVector {
  int weight = 0;
  int depth = 0;
  std::vector<Rational> coords;
  bool operator==(const CoeffVector&) const = default;
  bool is_zero() const;
};

// Coefficient extraction along the monomials x^{n1-1}...x^{nr-1}; a monomial
// outside the span is an error naming it.
CoeffVector pi_coords(const XPoly& p, int N, int r);
XPoly pi_inverse(const CoeffVector& a);

// Row action a * M for a square Tasaka matrix over the same S_{N,r}.
CoeffVector apply_matrix(const CoeffVector& a, const TasakaMatrix& m);

// a -> a (E_{N,r} - I). Defined on all of Vect_{N,r}.
CoeffVector eta(const CoeffVector& a);
CoeffVector eta(const CoeffVector& a, const TasakaMatrix& e_full);

// Row action of the block matrix delta(m1;n1) e(m2..mr;n2..nr).
CoeffVector eta_tilde(const CoeffVector& a);
CoeffVector eta_tilde(const CoeffVector& a, const TasakaMatrix& eta_tilde_mat);

// Stacked pi-coordinates of a W basis, one row per basis element.
MatQ coords_matrix(const MultivarPolySpace& space);

struct TasakaVerification {
  int weight = 0;
  int depth = 0;
  std::size_t dim_w = 0;       // dim W_{N,r}
  std::size_t dim_image = 0;   // dim eta(pi(W_{N,r}))
  std::size_t dim_kernel = 0;  // dim Ker E_{N,r}
  bool inclusion_ok = true;    // image lies in Ker E_{N,r}
  bool injective = true;       // dim_image == dim_w
  bool surjective = true;      // dim_image == dim_kernel
};

// Exact check of the isomorphism statement at (N, r), r >= 3. A failed
// conjectural part is a reported finding, not an error.
TasakaVerification verify_tasaka(int N, int r);

}  // namespace mdl::tasaka
