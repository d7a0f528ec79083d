#include "mdl/expr.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace mdl::cli {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at position " +
                                std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::string read_digits() {
    std::string out;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      out.push_back(text[pos++]);
    if (out.empty()) fail("expected digits");
    return out;
  }

  ExprPtr parse_expr() {
    ExprPtr node = parse_term();
    for (;;) {
      if (eat('+')) {
        auto sum = std::make_shared<ExprNode>();
        sum->kind = ExprNode::Kind::add;
        sum->args = {node, parse_term()};
        node = sum;
      } else if (eat('-')) {
        auto diff = std::make_shared<ExprNode>();
        diff->kind = ExprNode::Kind::sub;
        diff->args = {node, parse_term()};
        node = diff;
      } else {
        return node;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr node = parse_factor();
    while (eat('*')) {
      auto prod = std::make_shared<ExprNode>();
      prod->kind = ExprNode::Kind::mul;
      prod->args = {node, parse_factor()};
      node = prod;
    }
    return node;
  }

  ExprPtr parse_factor() {
    const char c = peek();
    if (c == '-') {
      ++pos;
      auto neg = std::make_shared<ExprNode>();
      neg->kind = ExprNode::Kind::neg;
      neg->args = {parse_factor()};
      return neg;
    }
    if (c == '(') {
      ++pos;
      ExprPtr inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '{') {
      ++pos;
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::bracket;
      node->args.push_back(parse_expr());
      if (!eat(',')) fail("expected ',' inside '{...}'");
      node->args.push_back(parse_expr());
      if (!eat('}')) fail("expected '}'");
      return node;
    }
    if (c == 's') {
      ++pos;
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::generator;
      node->generator = std::stoi(read_digits());
      if (node->generator < 3 || node->generator % 2 == 0)
        fail("generator index must be odd and >= 3, got s" +
             std::to_string(node->generator));
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto node = std::make_shared<ExprNode>();
      node->kind = ExprNode::Kind::number;
      const std::string num = read_digits();
      if (eat('/')) {
        skip_ws();
        const std::string den = read_digits();
        node->value = rat_parse(num + "/" + den);
      } else {
        node->value = rat_parse(num);
      }
      return node;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

// A partially evaluated expression: a scalar until the first generator shows up.
template <typename Poly>
struct Value {
  std::optional<Rational> scalar;
  std::optional<Poly> poly;
};

template <typename Algebra>
Value<typename Algebra::Poly> eval(const ExprPtr& e, const Algebra& alg) {
  using V = Value<typename Algebra::Poly>;
  switch (e->kind) {
    case ExprNode::Kind::number:
      return V{e->value, std::nullopt};
    case ExprNode::Kind::generator:
      return V{std::nullopt, alg.generator(e->generator)};
    case ExprNode::Kind::neg: {
      V v = eval(e->args[0], alg);
      if (v.scalar) return V{-*v.scalar, std::nullopt};
      return V{std::nullopt, Rational(-1) * *v.poly};
    }
    case ExprNode::Kind::add:
    case ExprNode::Kind::sub: {
      V a = eval(e->args[0], alg);
      V b = eval(e->args[1], alg);
      const bool minus = e->kind == ExprNode::Kind::sub;
      if (a.scalar && b.scalar)
        return V{minus ? Rational(*a.scalar - *b.scalar)
                       : Rational(*a.scalar + *b.scalar),
                 std::nullopt};
      if (a.poly && b.poly)
        return V{std::nullopt, minus ? *a.poly - *b.poly : *a.poly + *b.poly};
      throw std::invalid_argument(
          "expression error: cannot add a scalar to an algebra element");
    }
    case ExprNode::Kind::mul: {
      V a = eval(e->args[0], alg);
      V b = eval(e->args[1], alg);
      if (a.scalar && b.scalar) return V{*a.scalar * *b.scalar, std::nullopt};
      if (a.scalar && b.poly) return V{std::nullopt, *a.scalar * *b.poly};
      if (a.poly && b.scalar) return V{std::nullopt, *b.scalar * *a.poly};
      throw std::invalid_argument(
          "expression error: '*' between two algebra elements is not defined; "
          "use {a,b} for the bracket");
    }
    case ExprNode::Kind::bracket: {
      V a = eval(e->args[0], alg);
      V b = eval(e->args[1], alg);
      if (!a.poly || !b.poly)
        throw std::invalid_argument(
            "expression error: both sides of {a,b} must be algebra elements");
      return V{std::nullopt, alg.bracket(*a.poly, *b.poly)};
    }
  }
  throw std::logic_error("eval: bad node kind");
}

struct IharaAlgebra {
  using Poly = liealg::NCPoly;
  Poly generator(int m) const { return liealg::sigma_bar_word(m); }
  Poly bracket(const Poly& a, const Poly& b) const {
    return liealg::ihara_bracket(a, b);
  }
};

struct DepthGradedAlgebra {
  using Poly = liealg::DepthPoly;
  Poly generator(int m) const { return liealg::sigma_poly(m); }
  Poly bracket(const Poly& a, const Poly& b) const {
    return liealg::dg_bracket(a, b);
  }
};

template <typename Algebra>
typename Algebra::Poly eval_top(const ExprPtr& e) {
  auto v = eval(e, Algebra{});
  if (!v.poly)
    throw std::invalid_argument(
        "expression error: the expression contains no generators");
  return *v.poly;
}

}  // namespace

ExprPtr parse_sigma_expr(const std::string& text) {
  Parser parser{text};
  ExprPtr node = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return node;
}

liealg::NCPoly eval_ihara(const ExprPtr& e) { return eval_top<IharaAlgebra>(e); }

liealg::DepthPoly eval_depth_graded(const ExprPtr& e) {
  return eval_top<DepthGradedAlgebra>(e);
}

}  // namespace mdl::cli
