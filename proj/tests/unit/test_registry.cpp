#include <gtest/gtest.h>

#include "ellgal/errors.hpp"
#include "ellgal/registry.hpp"

using namespace ellgal;

TEST(Registry, EmbeddedTableHasSevenEntries) {
  const auto& reg = paper_registry();
  ASSERT_EQ(reg.size(), 7u);
  const int degrees[] = {3, 4, 6, 4, 8, 9, 8};
  for (std::size_t i = 0; i < reg.size(); ++i) {
    EXPECT_EQ(reg[i].id, 13 + static_cast<int>(i));
    EXPECT_EQ(reg[i].degree, degrees[i]);
    EXPECT_EQ(reg[i].group.order(), degrees[i]);
  }
  EXPECT_EQ(find_registry_entry(16)->parameter_sets().size(), 3u);
  EXPECT_EQ(find_registry_entry(12), nullptr);
}

TEST(Registry, ParsesTheFileFormat) {
  const auto entries = parse_registry(R"(
# comment
[example 1]
field = e3
curve = x^3 + 1   # trailing comment
gen = w x ; y
s = y
t = x
F = t^3 = s^2 - 1
group = Z3
degree = 3
translation = 0 ; 1 -> (2 - 2y)/x^2 ; (y - 3)/(y + 1)
)");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].ring(), RingTag::e3());
  EXPECT_EQ(entries[0].generators.size(), 1u);
  EXPECT_EQ(entries[0].translations.size(), 1u);
  const TranslationOutcome t = check_translation(entries[0], entries[0].translations[0], {});
  EXPECT_TRUE(t.matches);
}

TEST(Registry, RejectsMalformedFiles) {
  EXPECT_THROW(parse_registry("curve = x^3 + 1\n"), ParseError);
  EXPECT_THROW(parse_registry("[example 1]\nbogus = 1\n"), ParseError);
  EXPECT_THROW(parse_registry("[example 1]\ncurve = x^3+1\n"), ParseError);
  EXPECT_THROW(parse_registry("[example 1]\nparams = x\n"), ParseError);
  EXPECT_THROW(parse_registry("[example 1]\nparams = a\nspecialize = 1 2\n"), ParseError);
  EXPECT_THROW(parse_registry("[example 1]\ngroup = Q7\n"), ParseError);
  EXPECT_THROW(field_from_tag("e5"), ParseError);
}

TEST(Registry, EveryEntryBuildsAndVerifiesItsRelation) {
  for (const auto& e : paper_registry()) {
    for (const auto& p : e.parameter_sets()) {
      const CoverSpec spec = build_cover_spec(e, p);
      EXPECT_TRUE(verify_relation(spec.F, spec.s, spec.t)) << e.id;
      EXPECT_EQ(spec.F.degree_t(), e.degree) << e.id;
      for (const auto& g : spec.generators) EXPECT_TRUE(g.lands_on_curve()) << e.id;
    }
  }
}

TEST(Registry, EveryCoefficientMutationBreaksTheRelation) {
  for (const auto& e : paper_registry()) {
    for (const auto& p : e.parameter_sets()) {
      const CoverSpec spec = build_cover_spec(e, p);
      for (const auto& [mono, coeff] : spec.F.terms()) {
        const BiPoly mutated = spec.F.perturbed(mono, QuadElem::one(e.ring()));
        EXPECT_FALSE(verify_relation(mutated, spec.s, spec.t)) << e.id << " monomial s^" << mono.first << " t^" << mono.second;
      }
    }
  }
}

TEST(Registry, Example16HoldsAtFurtherSpecializations) {
  const RegistryEntry& e = *find_registry_entry(16);
  for (const auto& [b, a] : std::vector<std::pair<long, long>>{{5, 7}, {-3, 2}, {4, -5}, {7, 11}}) {
    const Parameters p{{'a', Rational(a)}, {'b', Rational(b)}};
    const CoverSpec spec = build_cover_spec(e, p);
    EXPECT_TRUE(verify_relation(spec.F, spec.s, spec.t)) << "b=" << b << " a=" << a;
    EXPECT_TRUE(verify_galois_cover(spec).passed) << "b=" << b << " a=" << a;
  }
}
