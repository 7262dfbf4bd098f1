#include <gtest/gtest.h>

#include "ellgal/errors.hpp"
#include "ellgal/expression.hpp"
#include "ellgal/function_field.hpp"
#include "ellgal/registry.hpp"

using namespace ellgal;

namespace {

CurvePtr curve_of(RingTag ring, const char* f) {
  return std::make_shared<const Curve>(expression_ratfunc(parse_expression(f), ring).num());
}

FFElem fe(const CurvePtr& c, const char* e) { return expression_ffelem(parse_expression(e), c); }

AutMap map_of(const CurvePtr& c, const char* xi, const char* eta) { return build_map(c, xi, eta, {}); }

CurvePoint pt(RingTag ring, long x, long y) { return std::make_pair(QuadElem(ring, x), QuadElem(ring, y)); }

const RingTag kQ = RingTag::rationals();
const RingTag kE3 = RingTag::e3();
const RingTag kE4 = RingTag::e4();

}  // namespace

TEST(Curve, RejectsBadCubics) {
  EXPECT_THROW(Curve(expression_ratfunc(parse_expression("x^3"), kQ).num()), DegeneracyError);
  EXPECT_THROW(Curve(expression_ratfunc(parse_expression("2x^3 + 1"), kQ).num()), PreconditionError);
  EXPECT_THROW(Curve(expression_ratfunc(parse_expression("x^2 + 1"), kQ).num()), PreconditionError);
  EXPECT_THROW(Curve::legendre(kQ, 1), DegeneracyError);
  EXPECT_NO_THROW(Curve::legendre(kQ, 2));
  EXPECT_TRUE(Curve::weierstrass(kQ, 0, 1).contains(QuadElem(kQ, 2), QuadElem(kQ, 3)));
}

TEST(FFElem, Arithmetic) {
  const CurvePtr c = curve_of(kQ, "x^3 + 1");
  const FFElem y = FFElem::y(c);
  EXPECT_EQ(y * y, fe(c, "x^3 + 1"));
  EXPECT_EQ((y + fe(c, "1")) * (y - fe(c, "1")), fe(c, "x^3"));
  const CurvePtr c2 = curve_of(kQ, "x^3 + x");
  const FFElem y2 = FFElem::y(c2);
  EXPECT_EQ(y2.inverse(), fe(c2, "y/(x^3 + x)"));
  EXPECT_EQ(y2.inverse() * y2, fe(c2, "1"));
  EXPECT_THROW(fe(c, "0").inverse(), DivisionByZeroError);
  EXPECT_EQ(y.pow(-2), fe(c, "1/(x^3 + 1)"));
  EXPECT_EQ(y.norm(), -fe(c, "x^3 + 1").r());
}

TEST(FFElem, DifferentCurvesDoNotMix) {
  const CurvePtr a = curve_of(kQ, "x^3 + 1"), b = curve_of(kQ, "x^3 + x");
  EXPECT_THROW(FFElem::x(a) + FFElem::x(b), TagMismatchError);
}

TEST(AutMap, OrdersAndComposition) {
  const CurvePtr c = curve_of(kE3, "x^3 + 1");
  const AutMap rot = map_of(c, "w x", "y");
  EXPECT_TRUE(rot.lands_on_curve());
  EXPECT_EQ(aut_order(rot), 3);
  const AutMap tau = map_of(c, "(2 - 2y)/x^2", "(y - 3)/(y + 1)");
  EXPECT_TRUE(tau.lands_on_curve());
  EXPECT_EQ(aut_order(tau), 3);
  const AutMap id = AutMap::identity(c);
  EXPECT_EQ(compose(id, tau), tau);
  EXPECT_EQ(compose(tau, id), tau);
  const AutMap bad = map_of(c, "x + 1", "y");
  EXPECT_FALSE(bad.lands_on_curve());
  const AutMap scale = map_of(curve_of(kQ, "x^3 + 1"), "x", "-y");
  EXPECT_EQ(aut_order(scale), 2);
}

TEST(Translation, ReproducesClosedForms) {
  const CurvePtr c17 = curve_of(kQ, "x^3 + x");
  EXPECT_EQ(translation_map(c17, pt(kQ, 0, 0)), map_of(c17, "1/x", "-y/x^2"));
  const CurvePtr c18 = curve_of(kQ, "x^3 + 1");
  EXPECT_EQ(translation_map(c18, pt(kQ, 0, 1)), map_of(c18, "(2 - 2y)/x^2", "(y - 3)/(y + 1)"));
  EXPECT_TRUE(translation_map(c18, std::nullopt).is_identity());
  EXPECT_THROW(translation_map(c18, pt(kQ, 1, 1)), NotOnCurveError);
}

TEST(Translation, LegendreTwoTorsionFollowsTheGroupLaw) {
  // Adding (b, 0) sends y to -b(b-1)y/(x-b)^2; x goes to b(x-1)/(x-b).
  for (long b : {2L, -2L, 3L}) {
    const auto c = std::make_shared<const Curve>(Curve::legendre(kQ, b));
    const Parameters p{{'b', Rational(b)}};
    const AutMap expected = build_map(c, "b(x - 1)/(x - b)", "-b(b - 1)y/(x - b)^2", p);
    EXPECT_EQ(translation_map(c, pt(kQ, b, 0)), expected) << b;
  }
}

TEST(Translation, OrderMatchesPointOrder) {
  const CurvePtr c = curve_of(kQ, "x^3 + 1");
  for (const auto& p : {pt(kQ, 0, 1), pt(kQ, 0, -1), pt(kQ, -1, 0), pt(kQ, 2, 3), pt(kQ, 2, -3)}) {
    const auto n = point_order(*c, p);
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(aut_order(translation_map(c, p)), *n);
  }
  EXPECT_EQ(point_order(*c, pt(kQ, 2, 3)), 6);
  const CurvePtr ci = curve_of(kE4, "x^3 + x");
  const CurvePoint i0 = std::make_pair(QuadElem::zeta(kE4), QuadElem::zero(kE4));
  EXPECT_EQ(point_order(*ci, i0), 2);
  EXPECT_EQ(aut_order(translation_map(ci, i0)), 2);
}

TEST(Translation, GroupLawConsistency) {
  const CurvePtr c = curve_of(kQ, "x^3 + 1");
  const std::vector<CurvePoint> pts{std::nullopt, pt(kQ, 0, 1), pt(kQ, 0, -1), pt(kQ, -1, 0), pt(kQ, 2, 3),
                                    pt(kQ, 2, -3)};
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      const AutMap lhs = compose(translation_map(c, p), translation_map(c, q));
      const AutMap rhs = translation_map(c, curve_add(*c, p, q));
      ASSERT_EQ(lhs, rhs);
      ASSERT_TRUE(lhs.lands_on_curve());
    }
    ASSERT_EQ(curve_add(*c, p, curve_neg(p)), CurvePoint{});
  }
}

TEST(Invariance, RegistryFunctions) {
  const auto c16 = std::make_shared<const Curve>(Curve::legendre(kQ, 2));
  const Parameters p{{'b', Rational(2)}};
  const AutMap tau16 = build_map(c16, "b(x - 1)/(x - b)", "b(b - 1)y/(x - b)^2", p);
  EXPECT_TRUE(is_invariant(expression_ffelem(parse_expression("(x^2 - b)/(x - b)"), c16, p), tau16));
  const CurvePtr c18 = curve_of(kE3, "x^3 + 1");
  const AutMap tau18 = map_of(c18, "(2 - 2y)/x^2", "(y - 3)/(y + 1)");
  EXPECT_TRUE(is_invariant(fe(c18, "-y(y^2 - 9)/(y^2 - 1)"), tau18));
  EXPECT_FALSE(is_invariant(fe(c18, "x"), map_of(c18, "w x", "y")));
}

TEST(Degree, FiberCounts) {
  const CurvePtr cx = curve_of(kQ, "x^3 + x");
  const CurvePtr c1 = curve_of(kQ, "x^3 + 1");
  EXPECT_EQ(map_degree(fe(cx, "x^2")), 4);
  EXPECT_EQ(map_degree(fe(c1, "x^3")), 6);
  EXPECT_EQ(map_degree(fe(c1, "y")), 3);
  EXPECT_EQ(map_degree(fe(c1, "x")), 2);
  EXPECT_EQ(map_degree(fe(c1, "-y(y^2 - 9)/(y^2 - 1)")), 9);
  EXPECT_EQ(map_degree(fe(c1, "1/x")), 2);
  EXPECT_EQ(map_degree(fe(c1, "(y + 1)/x")), 2);
  EXPECT_THROW(map_degree(fe(c1, "5")), PreconditionError);
}

TEST(Degree, IndependentOfSeed) {
  const CurvePtr c1 = curve_of(kQ, "x^3 + 1");
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL, 123456789ULL}) {
    EXPECT_EQ(map_degree(fe(c1, "x^3 + y"), DegreeOptions{seed, 3}), 6);
  }
}

TEST(Relation, DetectsIdentitiesAndMutations) {
  const CurvePtr c = curve_of(kE3, "x^3 + 1");
  const BiPoly F = expression_bipoly(parse_expression("t^6 - s^2(s + 1)^3"), kE3);
  EXPECT_TRUE(verify_relation(F, fe(c, "x^3"), fe(c, "x y")));
  EXPECT_FALSE(verify_relation(F.perturbed({0, 0}, QuadElem::one(kE3)), fe(c, "x^3"), fe(c, "x y")));
}

TEST(Stabilizer, FindsRotations) {
  const CurvePtr c = curve_of(kE3, "x^3 + 1");
  const auto candidates = rotation_translation_candidates(c, {std::nullopt});
  const auto fy = find_stabilizing_automorphism(fe(c, "y"), candidates);
  ASSERT_TRUE(fy.has_value());
  EXPECT_EQ(fy->eta, fe(c, "y"));
  EXPECT_EQ(aut_order(*fy), 3);
  const auto fx = find_stabilizing_automorphism(fe(c, "x"), candidates);
  ASSERT_TRUE(fx.has_value());
  EXPECT_EQ(*fx, map_of(c, "x", "-y"));
  EXPECT_FALSE(find_stabilizing_automorphism(fe(c, "x + y"), candidates).has_value());
}

TEST(Cover, SabotagedGroupFailsTheDegreeClause) {
  CoverSpec spec = build_cover_spec(*find_registry_entry(14), {});
  EXPECT_TRUE(verify_galois_cover(spec).passed);
  spec.expected_group = GroupLabel::cyclic(3);
  const CoverCertificate cert = verify_galois_cover(spec);
  EXPECT_FALSE(cert.passed);
  EXPECT_FALSE(cert.clause(4).passed);
  EXPECT_EQ(cert.degree, 4);
}

TEST(Cover, NonInvariantFunctionFailsClauseThree) {
  CoverSpec spec = build_cover_spec(*find_registry_entry(13), {});
  spec.s = FFElem::x(spec.curve);
  const CoverCertificate cert = verify_galois_cover(spec);
  EXPECT_FALSE(cert.passed);
  EXPECT_FALSE(cert.clause(3).passed);
}

TEST(Closure, MapsFormTheExpectedGroup) {
  const CoverSpec spec = build_cover_spec(*find_registry_entry(18), {});
  const auto elems = map_closure(spec.curve, spec.generators);
  EXPECT_EQ(elems.size(), 9u);
  EXPECT_TRUE(elems.front().is_identity());
  EXPECT_TRUE(isomorphic(cayley_group(elems), canonical_group(GroupLabel::abelian({3, 3}))));
}
