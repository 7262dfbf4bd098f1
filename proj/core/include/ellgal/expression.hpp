#pragma once

// Rational expressions over single-letter variables, e.g.
//   b(x-1)/(x-b),   (2 - 2y)/x^2,   t^6 = s^2(s+1)^3,   1/2 + 3/4*w
// Every letter is its own variable, so "ab" is a*b. Juxtaposition multiplies.
// "lhs = rhs" denotes lhs - rhs. w stands for the adjoined root of unity.

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ellgal/exact_arith.hpp"
#include "ellgal/function_field.hpp"
#include "ellgal/polynomial.hpp"

namespace ellgal {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { number, variable, add, sub, mul, div, neg, pow };
  Kind kind = Kind::number;
  Integer value;       // number literal, or the exponent of pow
  char name = 0;       // variable letter
  Expr lhs, rhs;       // operands (neg and pow use lhs)
};

/// Throws ParseError with the offending position.
Expr parse_expression(std::string_view text);

/// Letters of the expression, each once.
std::string free_variables(const Expr& e);

/// Bottom-up evaluation into any field-like type.
template <class T>
struct ExprAlgebra {
  std::function<T(const Integer&)> number;
  std::function<T(char)> variable;
  std::function<T(const T&, const T&)> divide;  // defaults to operator/ when unset
  std::function<T(const T&, const Integer&)> power;
};

template <class T>
T evaluate_expression(const Expr& e, const ExprAlgebra<T>& alg) {
  switch (e->kind) {
    case ExprNode::Kind::number: return alg.number(e->value);
    case ExprNode::Kind::variable: return alg.variable(e->name);
    case ExprNode::Kind::add: return evaluate_expression(e->lhs, alg) + evaluate_expression(e->rhs, alg);
    case ExprNode::Kind::sub: return evaluate_expression(e->lhs, alg) - evaluate_expression(e->rhs, alg);
    case ExprNode::Kind::mul: return evaluate_expression(e->lhs, alg) * evaluate_expression(e->rhs, alg);
    case ExprNode::Kind::div: {
      T a = evaluate_expression(e->lhs, alg);
      T b = evaluate_expression(e->rhs, alg);
      if (alg.divide) return alg.divide(a, b);
      if constexpr (requires { a / b; }) {
        return a / b;
      } else {
        throw std::logic_error("division is not defined here");
      }
    }
    case ExprNode::Kind::neg: return -evaluate_expression(e->lhs, alg);
    case ExprNode::Kind::pow: return alg.power(evaluate_expression(e->lhs, alg), e->value);
  }
  return alg.number(0);
}

/// Values substituted for parameter letters such as a and b.
using Parameters = std::map<char, Rational>;

/// Constant over the ring: numbers, w and parameters only.
QuadElem expression_constant(const Expr& e, RingTag ring, const Parameters& params = {});
/// Rational function in x.
RatFunc expression_ratfunc(const Expr& e, RingTag ring, const Parameters& params = {});
/// Element of the function field in x and y.
FFElem expression_ffelem(const Expr& e, const CurvePtr& curve, const Parameters& params = {});
/// Polynomial in s and t; divisions must be by nonzero constants.
BiPoly expression_bipoly(const Expr& e, RingTag ring, const Parameters& params = {});

}  // namespace ellgal
