#include <gtest/gtest.h>

#include "ellgal/errors.hpp"
#include "ellgal/expression.hpp"

using namespace ellgal;

TEST(Expression, ParsesJuxtapositionAndPowers) {
  const RingTag q = RingTag::rationals();
  EXPECT_EQ(expression_constant(parse_expression("2(3 + 4)^2"), q), QuadElem(q, 98));
  EXPECT_EQ(expression_constant(parse_expression("-2^2"), q), QuadElem(q, -4));
  EXPECT_EQ(expression_constant(parse_expression("2^-2"), q), QuadElem(q, make_rational(1, 4)));
  EXPECT_EQ(expression_constant(parse_expression("1/2 + 3/4*w"), RingTag::e4()),
            QuadElem(RingTag::e4(), make_rational(1, 2), make_rational(3, 4)));
  EXPECT_EQ(expression_constant(parse_expression("ab"), q, {{'a', 3}, {'b', 5}}), QuadElem(q, 15));
}

TEST(Expression, EquationsBecomeDifferences) {
  const RingTag q = RingTag::rationals();
  const BiPoly f = expression_bipoly(parse_expression("t^3 = s^2 - 1"), q);
  BiPoly g = BiPoly::t(q) * BiPoly::t(q) * BiPoly::t(q) - BiPoly::s(q) * BiPoly::s(q) + BiPoly::constant(QuadElem::one(q));
  EXPECT_EQ(f, g);
  EXPECT_EQ(f.degree_t(), 3);
  EXPECT_EQ(f.degree_s(), 2);
}

TEST(Expression, RationalFunctionsInX) {
  const RingTag q = RingTag::rationals();
  const RatFunc r = expression_ratfunc(parse_expression("(x^2 - 1)/(x - 1)"), q);
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.num(), Poly(q, {QuadElem::one(q), QuadElem::one(q)}));
}

TEST(Expression, FreeVariables) {
  EXPECT_EQ(free_variables(parse_expression("b(x - 1)/(x - b) + y")), "bxy");
}

TEST(Expression, Errors) {
  EXPECT_THROW(parse_expression("(x + 1"), ParseError);
  EXPECT_THROW(parse_expression("x +"), ParseError);
  EXPECT_THROW(parse_expression("x ^ y"), ParseError);
  EXPECT_THROW(parse_expression("x $ 2"), ParseError);
  try {
    parse_expression("x + )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(expression_constant(parse_expression("q"), RingTag::rationals()), ParseError);
  EXPECT_THROW(expression_bipoly(parse_expression("1/s"), RingTag::rationals()), PreconditionError);
  EXPECT_THROW(expression_constant(parse_expression("1/0"), RingTag::rationals()), DivisionByZeroError);
}
