#include <gtest/gtest.h>

#include <random>

#include "ellgal/errors.hpp"
#include "ellgal/torsion_lattice.hpp"

using namespace ellgal;

namespace {

Integer gcd_of_entries(const RelationMatrix& cols) {
  Integer g = 0;
  for (const auto& c : cols) g = gcd(gcd(g, c[0]), c[1]);
  return g;
}

Integer gcd_of_minors(const RelationMatrix& cols) {
  Integer g = 0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      g = gcd(g, cols[i][0] * cols[j][1] - cols[i][1] * cols[j][0]);
    }
  }
  return g;
}

std::size_t killed_by(const TorsionSubgroup& g, const Integer& n) {
  std::size_t c = 0;
  for (const auto& p : g.elements) c += p.times(n).is_zero() ? 1 : 0;
  return c;
}

}  // namespace

TEST(Lattice, UnitOrdersAndNames) {
  EXPECT_EQ(unit_order(LatticeClass::generic), 2);
  EXPECT_EQ(unit_order(LatticeClass::square), 4);
  EXPECT_EQ(unit_order(LatticeClass::hexagonal), 6);
  EXPECT_EQ(parse_lattice("hex"), LatticeClass::hexagonal);
  EXPECT_FALSE(parse_lattice("cubic").has_value());
  EXPECT_TRUE(supports_rotation(LatticeClass::square, 4));
  EXPECT_FALSE(supports_rotation(LatticeClass::square, 3));
  EXPECT_FALSE(supports_rotation(LatticeClass::generic, 6));
}

TEST(Lattice, UnitMatricesHaveTheRightOrder) {
  for (const auto [lat, l] : {std::pair{LatticeClass::square, 4}, std::pair{LatticeClass::hexagonal, 3},
                              std::pair{LatticeClass::hexagonal, 6}, std::pair{LatticeClass::generic, 2}}) {
    const IntMatrix2 b = unit_matrix(lat, l);
    EXPECT_EQ(mat_pow(b, l), IntMatrix2::identity());
    for (int k = 1; k < l; ++k) EXPECT_FALSE(mat_pow(b, k) == IntMatrix2::identity());
    EXPECT_EQ(b.det(), 1);
  }
  EXPECT_EQ(unit_matrix(LatticeClass::square, 4), IntMatrix2::rows(0, -1, 1, 0));
  EXPECT_THROW(unit_matrix(LatticeClass::generic, 4), UnsupportedRotationError);
}

TEST(TorsionPoint, ReducesModOneAndHasOrders) {
  const TorsionPoint p(LatticeClass::square, make_rational(7, 5), make_rational(-1, 10));
  EXPECT_EQ(p.u(), make_rational(2, 5));
  EXPECT_EQ(p.v(), make_rational(9, 10));
  EXPECT_EQ(torsion_order(p), 10);
  EXPECT_TRUE(p.times(10).is_zero());
  EXPECT_EQ(p + (-p), TorsionPoint(LatticeClass::square));
}

TEST(TorsionPoint, UnitActionMatchesMultiplication) {
  // i * (2 + i)/5 = (-1 + 2i)/5
  const TorsionPoint p = TorsionPoint::from_quad(LatticeClass::square,
                                                 QuadElem(RingTag::e4(), make_rational(2, 5), make_rational(1, 5)));
  const TorsionPoint ip = TorsionPoint::from_quad(
      LatticeClass::square, QuadElem(RingTag::e4(), make_rational(-1, 5), make_rational(2, 5)));
  EXPECT_EQ(unit_action(1, p), ip);
  EXPECT_EQ(unit_action(4, p), p);
}

TEST(TorsionPoint, HexagonalAcceptsEisensteinInput) {
  // (1 + 2 e3)/3 = (-1 + 2 e6)/3, fixed by e3 = e6^2 modulo the lattice
  const QuadElem q(RingTag::e3(), make_rational(1, 3), make_rational(2, 3));
  const TorsionPoint p = TorsionPoint::from_quad(LatticeClass::hexagonal, q);
  EXPECT_EQ(p.u(), make_rational(2, 3));
  EXPECT_EQ(p.v(), make_rational(2, 3));
  EXPECT_EQ(unit_action(2, p), p);
  EXPECT_FALSE(unit_action(1, p) == p);
}

TEST(SmithForm, AgreesWithGcdOfMinorsOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    RelationMatrix cols(1 + rng() % 4);
    for (auto& c : cols) {
      c[0] = static_cast<long>(rng() % 61) - 30;
      c[1] = static_cast<long>(rng() % 61) - 30;
    }
    const auto [d1, d2] = smith_form(cols);
    const Integer g1 = gcd_of_entries(cols);
    const Integer g2 = gcd_of_minors(cols);
    ASSERT_EQ(d1, g1);
    if (g1 == 0) {
      ASSERT_EQ(d2, 0);
    } else {
      ASSERT_EQ(d1 * d2, g2);
    }
    if (d2 != 0) ASSERT_EQ(d2 % d1, 0);
  }
}

TEST(SubgroupStructure, InvariantFactorsMatchBruteForceCounts) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t level = 1 + static_cast<std::int64_t>(rng() % 12);
    std::vector<TorsionPoint> gens;
    std::vector<std::array<std::int64_t, 2>> vecs;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i) {
      const std::int64_t a = static_cast<std::int64_t>(rng() % level), b = static_cast<std::int64_t>(rng() % level);
      vecs.push_back({a, b});
      gens.emplace_back(LatticeClass::generic, make_rational(a, level), make_rational(b, level));
    }
    const TorsionSubgroup g = subgroup_structure(gens);
    const auto [d1, d2] = g.invariant_factors;
    ASSERT_EQ(std::make_pair(d1, d2), torsion_invariant_factors(vecs, level));
    ASSERT_EQ(Integer(static_cast<unsigned long>(g.order())), d1 * d2);
    for (std::int64_t n = 1; n <= level; ++n) {
      const Integer expect = gcd(Integer(n), d1) * gcd(Integer(n), d2);
      ASSERT_EQ(Integer(static_cast<unsigned long>(killed_by(g, n))), expect) << "n = " << n;
    }
  }
}

TEST(SubgroupStructure, CapIsEnforced) {
  const TorsionPoint a(LatticeClass::generic, make_rational(1, 50), 0), b(LatticeClass::generic, 0, make_rational(1, 50));
  EXPECT_THROW(subgroup_structure({a, b}, 100), CapExceededError);
}

TEST(Independence, DetectsRationalDependence) {
  const TorsionPoint a(LatticeClass::square, make_rational(1, 5), 0);
  const TorsionPoint b(LatticeClass::square, make_rational(2, 5), 0);
  const TorsionPoint c(LatticeClass::square, 0, make_rational(1, 3));
  EXPECT_FALSE(rationally_independent(a, b));
  EXPECT_TRUE(rationally_independent(a, c));
}
