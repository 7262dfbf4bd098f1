#include "ellgal/paper_checks.hpp"

#include "ellgal/aut_group.hpp"
#include "ellgal/errors.hpp"
#include "ellgal/expression.hpp"

namespace ellgal {

namespace {

const LatticeClass kSquare = LatticeClass::square;

TorsionPoint square_point(const Rational& a, const Rational& b) {
  return TorsionPoint::from_quad(kSquare, QuadElem(RingTag::e4(), a, b));
}

/// e * (beta, beta') == (beta, beta') A modulo the lattice.
bool satisfies_action(const TorsionPoint& beta, const TorsionPoint& beta_prime, const IntMatrix2& a) {
  const TorsionPoint c1 = beta.times(a.p) + beta_prime.times(a.q);
  const TorsionPoint c2 = beta.times(a.r) + beta_prime.times(a.s);
  return unit_action(1, beta) == c1 && unit_action(1, beta_prime) == c2;
}

/// (beta, beta') = lambda (1, i) M for some lambda.
bool proportional_basis(const QuadElem& beta, const QuadElem& beta_prime, const IntMatrix2& m) {
  const RingTag ring = beta.ring();
  const QuadElem col1(ring, Rational(m.p), Rational(m.q));
  const QuadElem col2(ring, Rational(m.r), Rational(m.s));
  const QuadElem lambda = beta / col1;
  return lambda * col2 == beta_prime;
}

std::string factors_text(const std::pair<Integer, Integer>& f) {
  return "(" + f.first.get_str() + ", " + f.second.get_str() + ")";
}

}  // namespace

void CheckResult::require(bool ok, const std::string& what) {
  if (ok) return;
  passed = false;
  failures.push_back(what);
}

std::optional<std::string> CheckResult::find(const std::string& key) const {
  for (const auto& [k, v] : facts) {
    if (k == key) return v;
  }
  return std::nullopt;
}

CheckResult check_action_example() {
  CheckResult res;
  res.name = "action matrix on Z[i]";
  const QuadElem qb(RingTag::e4(), Rational(2, 5), Rational(1, 5));
  const QuadElem qbp(RingTag::e4(), Rational(3, 10), Rational(1, 10));
  const TorsionPoint beta = TorsionPoint::from_quad(kSquare, qb);
  const TorsionPoint beta_prime = TorsionPoint::from_quad(kSquare, qbp);
  try {
    const FiniteSubgroup g = closure({AffineAut::rotation(kSquare, 1), AffineAut::translation(beta),
                                      AffineAut::translation(beta_prime)});
    const IntMatrix2 a = action_matrix(g, beta, beta_prime);
    res.fact("group_order", std::to_string(g.order()));
    res.fact("action", a.to_string());
    res.require(congruent_mod_orders(a, IntMatrix2::rows(2, 0, 0, 3), 5, 10),
                "action is not diag(2, 3) mod (5, 10): " + a.to_string());

    const IntMatrix2 expected = IntMatrix2::rows(7, 5, -10, -7);
    for (const IntMatrix2& m : {IntMatrix2::rows(1, 1, 3, 2), IntMatrix2::rows(3, 2, -1, -1)}) {
      for (const IntMatrix2& mm : {m, -m}) {
        res.require(proportional_basis(qb, qbp, mm), "basis relation fails for M = " + mm.to_string());
        const IntMatrix2 a4 = action_matrix_from_base_change(mm, 4);
        res.require(a4 == expected, "M = " + mm.to_string() + " gives " + a4.to_string());
      }
    }
    const IntMatrix2 a4 = action_matrix_from_base_change(IntMatrix2::rows(1, 1, 3, 2), 4);
    res.fact("base_change_action", a4.to_string());
    res.require(satisfies_action(beta, beta_prime, a4), "base-change action does not hold exactly");
    res.require(congruent_mod_orders(a4, a, 5, 10), "the two actions differ mod (5, 10)");
  } catch (const Error& e) {
    res.require(false, e.what());
  }
  return res;
}

CheckResult check_order_1300(std::int64_t m) {
  CheckResult res;
  res.name = "order 1300 m^2, m = " + std::to_string(m);
  const Rational mm(m);
  struct Construction {
    TorsionPoint beta, beta_prime;
    IntMatrix2 matrix;
    std::pair<Integer, Integer> factors;
    GroupLabel label;
  };
  const Construction cons[2] = {
      {square_point(1 / (5 * mm), 0), square_point(-5 / (65 * mm), 1 / (65 * mm)), IntMatrix2::rows(5, -2, 13, -5),
       {Integer(5 * m), Integer(65 * m)}, GroupLabel::exc2(5 * m, 13, 4)},
      {square_point(1 / mm, 0), square_point(57 / (325 * mm), 1 / (325 * mm)), IntMatrix2::rows(-57, -10, 325, 57),
       {Integer(m), Integer(325 * m)}, GroupLabel::exc2(m, 325, 4)},
  };
  int idx = 0;
  for (const auto& c : cons) {
    const std::string tag = idx == 0 ? "first" : "second";
    ++idx;
    try {
      const FiniteSubgroup g = closure({AffineAut::rotation(kSquare, 1), AffineAut::translation(c.beta),
                                        AffineAut::translation(c.beta_prime)});
      const GroupLabel label = classify(g);
      const auto factors = g.torsion_part.invariant_factors;
      res.fact(tag + ".order", std::to_string(g.order()));
      res.fact(tag + ".factors", factors_text(factors));
      res.fact(tag + ".label", label.describe());
      res.fact(tag + ".det", c.matrix.det().get_str());
      res.require(g.order() == static_cast<std::size_t>(1300 * m * m), tag + ": order " + std::to_string(g.order()));
      res.require(factors == c.factors, tag + ": factors " + factors_text(factors));
      res.require(label == c.label, tag + ": label " + label.describe());
      res.require(c.matrix.det() == 1, tag + ": matrix not in SL2(Z)");
      res.require(satisfies_action(c.beta, c.beta_prime, c.matrix), tag + ": action relation fails");
    } catch (const Error& e) {
      res.require(false, tag + ": " + e.what());
    }
  }
  return res;
}

CheckResult verify_registry_entry(const RegistryEntry& entry, const DegreeOptions& options) {
  CheckResult res;
  res.name = "example " + std::to_string(entry.id);
  res.fact("expected_label", entry.group.describe());
  res.fact("expected_degree", std::to_string(entry.degree));
  const auto sets = entry.parameter_sets();
  res.fact("specializations", std::to_string(sets.size()));
  std::size_t translation_checks = 0;
  for (const auto& params : sets) {
    std::string where;
    for (const auto& [k, v] : params) where += std::string(where.empty() ? " at " : ", ") + k + " = " + v.get_str();
    try {
      const CoverSpec spec = build_cover_spec(entry, params);
      const CoverCertificate cert = verify_galois_cover(spec, options);
      for (const auto& c : cert.clauses) {
        res.require(c.passed, "clause " + std::to_string(c.clause) + where + ": " + c.detail);
      }
      res.require(cert.degree == entry.degree,
                  "degree " + (cert.degree ? std::to_string(*cert.degree) : std::string("unknown")) + where);
      if (!res.find("degree") && cert.degree) res.fact("degree", std::to_string(*cert.degree));
      if (!res.find("group_order")) res.fact("group_order", std::to_string(cert.group_order));
      for (const auto& tc : entry.translations) {
        const TranslationOutcome t = check_translation(entry, tc, params);
        ++translation_checks;
        res.require(t.matches, "translation by (" + tc.px + ", " + tc.py + ")" + where + " gives " +
                                   t.computed.to_string());
      }
    } catch (const Error& e) {
      res.require(false, std::string(e.what()) + where);
    }
  }
  res.fact("label", entry.group.describe());
  res.fact("translation_checks", std::to_string(translation_checks));
  if (entry.id == 13) {
    const ExtraPointReport r = search_extra_galois_point();
    res.fact("extra_point_candidates", std::to_string(r.candidates));
    res.fact("extra_point_map", r.automorphism ? r.automorphism->to_string() : "none");
    if (r.order) res.fact("extra_point_order", std::to_string(*r.order));
  }
  return res;
}

ExtraPointReport search_extra_galois_point() {
  const RingTag ring = RingTag::e3();
  auto curve = std::make_shared<const Curve>(Curve::weierstrass(ring, 0, 1));
  const QuadElem w = QuadElem::zeta(ring);
  const QuadElem w2 = w * w;
  auto q = [ring](long a) { return QuadElem(ring, a); };
  std::vector<CurvePoint> points{std::nullopt};
  const std::vector<std::pair<QuadElem, QuadElem>> affine{
      {q(0), q(1)},  {q(0), q(-1)},          {q(-1), q(0)},         {q(2), q(3)},
      {q(2), q(-3)}, {-w, q(0)},             {-w2, q(0)},           {q(2) * w, q(3)},
      {q(2) * w, q(-3)}, {q(2) * w2, q(3)}, {q(2) * w2, q(-3)}};
  for (const auto& p : affine) points.emplace_back(p);
  const std::vector<AutMap> candidates = rotation_translation_candidates(curve, points);
  const FFElem s = expression_ffelem(parse_expression("(y - (1 + 2w))/x"), curve);
  ExtraPointReport out;
  out.candidates = candidates.size();
  out.automorphism = find_stabilizing_automorphism(s, candidates);
  if (out.automorphism) {
    try {
      out.order = aut_order(*out.automorphism);
    } catch (const CapExceededError&) {
    }
  }
  return out;
}

std::vector<CheckResult> verify_paper(std::optional<int> example, const DegreeOptions& options) {
  std::vector<CheckResult> out;
  if (!example) {
    out.push_back(check_action_example());
    out.push_back(check_order_1300(1));
    out.push_back(check_order_1300(2));
  }
  for (const auto& entry : paper_registry()) {
    if (example && entry.id != *example) continue;
    out.push_back(verify_registry_entry(entry, options));
  }
  if (example && out.empty()) throw PreconditionError("no registry example " + std::to_string(*example));
  return out;
}

}  // namespace ellgal
