#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mdl/depth_poly.hpp"
#include "mdl/rational.hpp"
#include "mdl/words.hpp"

namespace mdl::cli {

// Micro-syntax for sigma expressions:
//   s3, s5, ...          depth-one generators
//   {a, b}               bracket
//   +, -, *              rational linear combinations, e.g. "2*{s3,s5} - s9"
//   ( ... )              grouping
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { number, generator, add, sub, mul, neg, bracket };
  Kind kind = Kind::number;
  Rational value;            // number
  int generator = 0;         // s<m>
  std::vector<ExprPtr> args;
};

ExprPtr parse_sigma_expr(const std::string& text);  // throws std::invalid_argument

// Evaluate with the generators as words and {,} as the Ihara bracket.
liealg::NCPoly eval_ihara(const ExprPtr& e);

// Evaluate with the generators as (y1-y0)^{m-1} and {,} as the depth-graded
// bracket. Only meaningful for homogeneous subexpressions.
liealg::DepthPoly eval_depth_graded(const ExprPtr& e);

}  // namespace mdl::cli
