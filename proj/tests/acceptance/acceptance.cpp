// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance                 all criteria
//   acceptance --criterion N   only criterion N

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ellgal/aut_group.hpp"
#include "ellgal/enumerator.hpp"
#include "ellgal/errors.hpp"
#include "ellgal/paper_checks.hpp"
#include "ellgal/realizability.hpp"
#include "ellgal/registry.hpp"

using namespace ellgal;

namespace {

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string join_first(const std::vector<std::string>& v, std::size_t n = 3) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < n; ++i) out += (i ? "; " : "") + v[i];
  if (v.size() > n) out += "; +" + std::to_string(v.size() - n) + " more";
  return out;
}

Verdict criterion_action_example() {
  Verdict v;
  const CheckResult r = check_action_example();
  v.expect(r.passed, join_first(r.failures));
  v.expect(r.find("base_change_action") == "(7, 5; -10, -7)", "base-change action differs");
  return v;
}

Verdict criterion_order_1300() {
  Verdict v;
  for (std::int64_t m : {1, 2}) {
    const CheckResult r = check_order_1300(m);
    v.expect(r.passed, "m = " + std::to_string(m) + ": " + join_first(r.failures));
  }
  return v;
}

Verdict criterion_registry() {
  Verdict v;
  const int degrees[] = {3, 4, 6, 4, 8, 9, 8};
  const auto& reg = paper_registry();
  v.expect(reg.size() == 7, "registry has " + std::to_string(reg.size()) + " entries");
  std::size_t closed_forms = 0;
  for (std::size_t i = 0; i < reg.size() && i < 7; ++i) {
    const RegistryEntry& e = reg[i];
    const std::string tag = "example " + std::to_string(e.id);
    v.expect(e.id == 13 + static_cast<int>(i), tag + " out of order");
    const auto sets = e.parameter_sets();
    if (e.id == 16) v.expect(sets.size() >= 3, "example 16 has fewer than 3 specializations");
    for (const auto& p : sets) {
      try {
        const CoverCertificate cert = verify_galois_cover(build_cover_spec(e, p));
        for (const auto& c : cert.clauses) v.expect(c.passed, tag + " clause " + std::to_string(c.clause) + ": " + c.detail);
        v.expect(cert.degree == degrees[i], tag + " degree mismatch");
      } catch (const Error& ex) {
        v.expect(false, tag + ": " + ex.what());
      }
      for (const auto& t : e.translations) {
        const TranslationOutcome o = check_translation(e, t, p);
        ++closed_forms;
        v.expect(o.matches, tag + " translation by (" + t.px + ", " + t.py + ") gives " + o.computed.to_string() +
                                ", printed " + o.expected.to_string());
      }
    }
  }
  v.expect(closed_forms >= 3, "fewer than three closed forms checked");
  return v;
}

Verdict criterion_enumeration() {
  Verdict v;
  struct Run {
    LatticeClass lattice;
    std::int64_t max_level;
  };
  for (const Run run : {Run{LatticeClass::generic, 4}, Run{LatticeClass::square, 4}, Run{LatticeClass::hexagonal, 3}}) {
    for (std::int64_t n = 1; n <= run.max_level; ++n) {
      const EnumerationResult res = enumerate_subgroups(run.lattice, n);
      const CensusReport rep = census_check(res);
      const std::string tag = lattice_name(run.lattice) + " N=" + std::to_string(n);
      v.expect(rep.passed, tag + ": " + join_first(rep.violations));
      v.expect(rep.classification_failures == 0, tag + ": classification failures");
      for (std::size_t i = 0; i < res.size(); ++i) {
        const auto& label = res.labels[i];
        if (!label) continue;
        if (label->is_abelian() && res.subgroups[i].unit_part_order > 1) {
          const auto& list = rotation_abelian_labels();
          v.expect(std::find(list.begin(), list.end(), *label) != list.end(), tag + ": " + label->to_string());
        }
        if (label->is_abelian() && galois_admissible(*label).galois_realizable) {
          v.expect(label->order() <= 9, tag + ": admissible abelian of order " + std::to_string(label->order()));
        }
      }
    }
  }
  const EnumerationResult hex7 = enumerate_subgroups(LatticeClass::hexagonal, 7);
  const CensusReport rep7 = census_check(hex7);
  v.expect(rep7.passed, "hex N=7: " + join_first(rep7.violations));
  bool found = false;
  for (std::size_t i = 0; i < hex7.size(); ++i) {
    if (hex7.labels[i] && *hex7.labels[i] == GroupLabel::exc1(7, 3) && hex7.subgroups[i].order() == 21) found = true;
  }
  v.expect(found, "hex N=7 has no Exc1(7,3) of order 21");
  return v;
}

Verdict criterion_oracles() {
  Verdict v;
  std::set<std::int64_t> k3, k6;
  for (int l : {3, 4, 6}) {
    for (std::int64_t k = 1; k <= 200; ++k) {
      const bool h = exists_h(k, l).has_value();
      const std::string tag = "k=" + std::to_string(k) + " l=" + std::to_string(l);
      v.expect(h == norm_form_rep(k, l).has_value(), tag + ": exists_h and norm_form_rep disagree");
      if (h) v.expect(prime_condition(k, l), tag + ": prime condition fails");
      if (h && l == 3) k3.insert(k);
      if (h && l == 6) k6.insert(k);
    }
  }
  v.expect(prime_condition(4, 4) && !exists_h(4, 4), "k=4 l=4 is not a counterexample");
  v.expect(prime_condition(9, 3) && !exists_h(9, 3), "k=9 l=3 is not a counterexample");
  v.expect(k3 == k6, "admissible k differ between l=3 and l=6");
  for (std::int64_t k = 1; k <= 200; ++k) {
    std::set<std::int64_t> shifted;
    for (auto h : admissible_h_values(k, 3)) shifted.insert((h + 1) % k);
    const auto six = admissible_h_values(k, 6);
    v.expect(shifted == std::set<std::int64_t>(six.begin(), six.end()), "h -> h+1 fails at k=" + std::to_string(k));
  }
  return v;
}

std::vector<GroupLabel> round_trip_catalog() {
  std::vector<GroupLabel> c;
  for (auto f : std::vector<std::vector<std::int64_t>>{{3}, {4}, {6}, {2, 2}, {2, 2, 2}, {3, 3}, {2, 4}})
    c.push_back(GroupLabel::abelian(f));
  for (std::int64_t n = 3; n <= 8; ++n) c.push_back(GroupLabel::dihedral(n));
  for (std::int64_t n = 3; n <= 8; ++n)
    for (std::int64_t m = 2; m <= n; ++m)
      if (n % m == 0) c.push_back(GroupLabel::bidihedral(m, n));
  for (std::int64_t k : {3, 7, 13}) {
    for (int l : {3, 4, 6}) {
      if (nondegenerate_h(k, l)) c.push_back(GroupLabel::exc1(k, l));
      if (exists_h(k, l))
        for (std::int64_t m = 2; m <= 3; ++m) c.push_back(GroupLabel::exc2(m, k, l));
    }
  }
  return c;
}

Verdict criterion_round_trip() {
  Verdict v;
  for (const auto& label : round_trip_catalog()) {
    try {
      const Witness w = realize(label);
      const FiniteSubgroup g = closure(w.generators);
      const GroupLabel got = classify(g);
      v.expect(got == label, label.describe() + " classified as " + got.describe());
      v.expect(static_cast<std::int64_t>(g.order()) == label.order(), label.describe() + " has closure order " +
                                                                          std::to_string(g.order()));
      if (const auto* e = label.as_exc2()) {
        v.expect(label.order() == e->m * e->m * e->k * e->l, label.describe() + " order is not m^2 k l");
      }
    } catch (const Error& ex) {
      v.expect(false, label.describe() + ": " + ex.what());
    }
  }
  return v;
}

Verdict criterion_galois_gate() {
  Verdict v;
  for (std::int64_t m = 2; m <= 12; ++m) {
    const GroupLabel z = GroupLabel::cyclic(m);
    const bool accepted = galois_admissible(z).galois_realizable;
    const bool expected = m == 3 || m == 4 || m == 6;
    v.expect(accepted == expected, "Z" + std::to_string(m) + (accepted ? " accepted" : " rejected"));
    if (expected) {
      const FiniteSubgroup g = closure(realize(z).generators);
      v.expect(g.unit_part_order > 1, "Z" + std::to_string(m) + " realized with trivial rotation part");
    }
  }
  v.expect(galois_admissible(GroupLabel::cyclic(2)).failure_reason == "|G| >= 3 fails", "Z2 rejected for another reason");

  const std::vector<GroupLabel> galois_abelian{GroupLabel::abelian({3}),    GroupLabel::abelian({4}),
                                      GroupLabel::abelian({6}),    GroupLabel::abelian({2, 2}),
                                      GroupLabel::abelian({2, 2, 2}), GroupLabel::abelian({3, 3}),
                                      GroupLabel::abelian({2, 4})};
  std::vector<GroupLabel> universe;
  for (std::int64_t d2 = 1; d2 <= 24; ++d2)
    for (std::int64_t d1 = 1; d1 <= d2; ++d1)
      if (d2 % d1 == 0) universe.push_back(GroupLabel::abelian({d1, d2}));
  for (auto f : std::vector<std::vector<std::int64_t>>{{2, 2, 2}, {2, 2, 4}, {3, 3, 3}, {2, 2, 2, 2}, {2, 4, 4}})
    universe.push_back(GroupLabel::abelian(f));
  std::size_t accepted = 0;
  for (const auto& l : universe) {
    const bool expected = std::find(galois_abelian.begin(), galois_abelian.end(), l) != galois_abelian.end();
    const bool ok = galois_admissible(l).galois_realizable;
    accepted += ok ? 1 : 0;
    v.expect(ok == expected, l.describe() + (ok ? " wrongly accepted" : " wrongly rejected"));
  }
  v.expect(accepted == galois_abelian.size(), "accepted " + std::to_string(accepted) + " abelian labels");
  return v;
}

Verdict criterion_mutations() {
  Verdict v;
  std::size_t mutations = 0;
  for (const auto& e : paper_registry()) {
    for (const auto& p : e.parameter_sets()) {
      const CoverSpec spec = build_cover_spec(e, p);
      v.expect(verify_relation(spec.F, spec.s, spec.t), "example " + std::to_string(e.id) + " relation fails unmutated");
      for (const auto& [mono, c] : spec.F.terms()) {
        ++mutations;
        v.expect(!verify_relation(spec.F.perturbed(mono, QuadElem::one(e.ring())), spec.s, spec.t),
                 "example " + std::to_string(e.id) + " survives a mutation");
      }
    }
  }
  v.expect(mutations > 0, "no mutations applied");
  CoverSpec sabotage = build_cover_spec(*find_registry_entry(14), {});
  sabotage.expected_group = GroupLabel::cyclic(3);
  const CoverCertificate cert = verify_galois_cover(sabotage);
  v.expect(!cert.passed && !cert.clause(4).passed, "example 14 claimed as Z3 does not fail clause 4");
  return v;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "action matrix example on Z[i]", 1, criterion_action_example},
      {2, "groups of order 1300 m^2", 10, criterion_order_1300},
      {3, "Galois-cover registry", 60, criterion_registry},
      {4, "enumeration cross-check", 300, criterion_enumeration},
      {5, "oracle agreement sweep", 10, criterion_oracles},
      {6, "round-trip catalog", 60, criterion_round_trip},
      {7, "Galois admissibility gate", 1, criterion_galois_gate},
      {8, "mutation controls", 30, criterion_mutations},
  };
  if (only != 0 && (only < 1 || only > 8)) {
    std::cerr << "criterion must be 1..8\n";
    return 2;
  }
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    v.expect(secs < c.budget_seconds, "runtime " + time.str() + "s over budget");
    all = all && v.ok;
    std::cout << "criterion " << c.id << ": " << (v.ok ? "PASS" : "FAIL") << "  " << c.title << " (" << time.str()
              << "s)";
    if (!v.ok) std::cout << "  -- " << join_first(v.notes);
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
