#include <gtest/gtest.h>

#include "ellgal/errors.hpp"
#include "ellgal/group_label.hpp"

using namespace ellgal;

TEST(InvariantFactors, NormalizesCyclicProducts) {
  EXPECT_EQ(invariant_factors_of({2, 3}), (std::vector<std::int64_t>{6}));
  EXPECT_EQ(invariant_factors_of({4, 6}), (std::vector<std::int64_t>{2, 12}));
  EXPECT_EQ(invariant_factors_of({1, 1}), (std::vector<std::int64_t>{}));
  EXPECT_EQ(invariant_factors_of({2, 2, 2}), (std::vector<std::int64_t>{2, 2, 2}));
}

TEST(GroupLabel, ParsesEveryForm) {
  const GroupLabel z23 = parse_group_label("Z2^3");
  ASSERT_TRUE(z23.as_abelian());
  EXPECT_EQ(z23.as_abelian()->factors, (std::vector<std::int64_t>{2, 2, 2}));
  EXPECT_EQ(z23.order(), 8);
  EXPECT_EQ(parse_group_label("E(5,13,4)"), GroupLabel::exc2(5, 13, 4));
  EXPECT_EQ(parse_group_label("D3"), GroupLabel::dihedral(3));
  EXPECT_EQ(parse_group_label(" Z2 x Z4 "), GroupLabel::abelian({2, 4}));
  EXPECT_EQ(parse_group_label("BD(2,4)"), GroupLabel::bidihedral(2, 4));
  EXPECT_EQ(parse_group_label("E(7,3)"), GroupLabel::exc1(7, 3));
}

TEST(GroupLabel, ParseErrorsCarryPosition) {
  try {
    parse_group_label("Z2xQ4");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_group_label(""), ParseError);
  EXPECT_THROW(parse_group_label("E(5,13)x"), ParseError);
  EXPECT_THROW(parse_group_label("BD(2,4"), ParseError);
}

TEST(GroupLabel, OrdersFollowTheFamilies) {
  EXPECT_EQ(GroupLabel::dihedral(5).order(), 10);
  EXPECT_EQ(GroupLabel::bidihedral(2, 4).order(), 16);
  EXPECT_EQ(GroupLabel::exc1(7, 3).order(), 21);
  EXPECT_EQ(GroupLabel::exc2(5, 13, 4).order(), 1300);
}

TEST(GroupLabel, CanonicalCollapses) {
  EXPECT_EQ(GroupLabel::exc2(1, 13, 4), GroupLabel::exc1(13, 4));
  EXPECT_EQ(GroupLabel::bidihedral(1, 5), GroupLabel::dihedral(5));
  EXPECT_THROW(GroupLabel::dihedral(2), PreconditionError);
}

TEST(GroupLabel, DescribeUsesConstructorNames) {
  EXPECT_EQ(GroupLabel::abelian({3, 3}).describe(), "Abelian(3,3)");
  EXPECT_EQ(GroupLabel::cyclic(6).describe(), "Abelian(1,6)");
  EXPECT_EQ(GroupLabel::exc2(5, 13, 4).describe(), "Exc2(5,13,4)");
  EXPECT_EQ(GroupLabel::dihedral(3).describe(), "Dihedral(3)");
}

TEST(GroupLabel, HIsNotPartOfEquality) {
  EXPECT_EQ(GroupLabel::exc1(7, 3).with_h(2), GroupLabel::exc1(7, 3).with_h(4));
}

TEST(GroupLabel, PrintParseRoundTrip) {
  std::vector<GroupLabel> catalog;
  for (auto f : std::vector<std::vector<std::int64_t>>{{}, {2}, {2, 2}, {2, 2, 2}, {3}, {3, 3}, {4}, {2, 4}, {6}, {5}, {4, 4}})
    catalog.push_back(GroupLabel::abelian(f));
  for (std::int64_t n = 3; n <= 8; ++n) catalog.push_back(GroupLabel::dihedral(n));
  for (std::int64_t n = 3; n <= 8; ++n)
    for (std::int64_t m = 2; m <= n; ++m)
      if (n % m == 0) catalog.push_back(GroupLabel::bidihedral(m, n));
  catalog.push_back(GroupLabel::exc1(7, 3));
  catalog.push_back(GroupLabel::exc1(13, 4));
  catalog.push_back(GroupLabel::exc2(3, 7, 6));
  catalog.push_back(GroupLabel::exc2(2, 1, 3));
  for (const auto& l : catalog) {
    EXPECT_EQ(parse_group_label(l.to_string()), l) << l.to_string();
  }
}
