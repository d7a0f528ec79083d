#pragma once

#include <json.hpp>

#include "mdl/depth_poly.hpp"
#include "mdl/matq.hpp"
#include "mdl/polyspace.hpp"
#include "mdl/tasaka.hpp"
#include "mdl/words.hpp"

namespace mdl {

// Shared matrix interchange format:
// {kind, weight, depth, level, row_index, col_index, entries} with entries a
// row-major list of exact coefficient strings.
nlohmann::json tasaka_to_json(const tasaka::TasakaMatrix& m);
tasaka::TasakaMatrix tasaka_from_json(const nlohmann::json& j);

// {"a0,a1,...,ar": "p/q"}; object keys end up sorted lexicographically.
nlohmann::json depth_poly_to_json(const liealg::DepthPoly& p);
liealg::DepthPoly depth_poly_from_json(const nlohmann::json& j);

// {"word-in-0/1-letters": "p/q"}; the empty word serializes as "".
nlohmann::json ncpoly_to_json(const liealg::NCPoly& p);

// {"n1,n2,...,nr": "p/q"}, zero coordinates omitted.
nlohmann::json coeff_vector_to_json(const tasaka::CoeffVector& v);

// List of coefficient-vector objects, one per basis element.
nlohmann::json w_space_to_json(const tasaka::MultivarPolySpace& space);

// {"a,b": "p/q"} exponent-keyed polynomials, one object per basis element.
nlohmann::json xpoly_to_json(const tasaka::XPoly& p);
nlohmann::json period_space_to_json(const tasaka::BivarPolySpace& space);

nlohmann::json subspace_to_json(const exactlin::SubspaceBasis& basis,
                                const liealg::IndexSet& index);

}  // namespace mdl
