#include "ellgal/aut_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ellgal/errors.hpp"
#include "ellgal/realizability.hpp"

namespace ellgal {

AffineAut AffineAut::rotation(LatticeClass lattice, int j) {
  return {lattice, static_cast<int>(mod_floor(j, unit_order(lattice))), TorsionPoint(lattice)};
}

AffineAut AffineAut::rotation_of_order(LatticeClass lattice, int l) {
  if (!supports_rotation(lattice, l)) {
    throw UnsupportedRotationError("the " + lattice_name(lattice) +
                                   " lattice has no rotation of order " + std::to_string(l));
  }
  return rotation(lattice, unit_order(lattice) / l);
}

std::string AffineAut::to_string() const {
  std::ostringstream os;
  os << "(" << j << ", " << beta.u() << ", " << beta.v() << ")";
  return os.str();
}

AffineAut compose(const AffineAut& a, const AffineAut& b) {
  if (a.lattice != b.lattice) throw TagMismatchError("composing maps of different lattices");
  const int n = unit_order(a.lattice);
  return {a.lattice, static_cast<int>(mod_floor(a.j + b.j, n)), a.beta + unit_action(a.j, b.beta)};
}

AffineAut inverse(const AffineAut& a) {
  const int n = unit_order(a.lattice);
  const int j = static_cast<int>(mod_floor(-a.j, n));
  return {a.lattice, j, -unit_action(j, a.beta)};
}

bool FiniteSubgroup::contains(const AffineAut& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool FiniteSubgroup::is_abelian() const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t k = i + 1; k < generators.size(); ++k) {
      if (!(compose(generators[i], generators[k]) == compose(generators[k], generators[i]))) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

CompactFrame::CompactFrame(LatticeClass lattice, std::int64_t level)
    : lattice_(lattice), level_(level), units_(unit_order(lattice)) {
  if (level_ < 1) throw PreconditionError("torsion level must be positive");
  const IntMatrix2 e = maximal_unit_matrix(lattice);
  IntMatrix2 p = IntMatrix2::identity();
  for (int j = 0; j < units_; ++j) {
    powers_.push_back({p.p.get_si(), p.r.get_si(), p.q.get_si(), p.s.get_si()});
    p = e * p;
  }
}

CompactFrame::Elem CompactFrame::mul(const Elem& x, const Elem& y) const {
  const auto& m = powers_[static_cast<std::size_t>(x.j)];
  return {(x.j + y.j) % units_, mod_floor(x.a + m[0] * y.a + m[1] * y.b, level_),
          mod_floor(x.b + m[2] * y.a + m[3] * y.b, level_)};
}

CompactFrame::Elem CompactFrame::inv(const Elem& x) const {
  const int j = (units_ - x.j) % units_;
  const auto& m = powers_[static_cast<std::size_t>(j)];
  return {j, mod_floor(-(m[0] * x.a + m[1] * x.b), level_),
          mod_floor(-(m[2] * x.a + m[3] * x.b), level_)};
}

CompactFrame::Elem CompactFrame::from_key(std::int64_t key) const {
  Elem x;
  x.b = key % level_;
  key /= level_;
  x.a = key % level_;
  x.j = static_cast<int>(key / level_);
  return x;
}

CompactFrame::Elem CompactFrame::encode(const AffineAut& g) const {
  if (g.lattice != lattice_) throw TagMismatchError("map lives on another lattice");
  const Rational a = g.beta.u() * level_;
  const Rational b = g.beta.v() * level_;
  if (a.get_den() != 1 || b.get_den() != 1) {
    throw PreconditionError("translation " + g.beta.to_string() + " is not " +
                            std::to_string(level_) + "-torsion");
  }
  return {static_cast<int>(mod_floor(g.j, units_)), a.get_num().get_si(), b.get_num().get_si()};
}

AffineAut CompactFrame::decode(const Elem& x) const {
  return {lattice_, x.j,
          TorsionPoint(lattice_, make_rational(x.a, level_), make_rational(x.b, level_))};
}

FiniteSubgroup subgroup_from_keys(const CompactFrame& frame, const std::vector<std::int64_t>& keys,
                                  std::vector<AffineAut> generators) {
  FiniteSubgroup g;
  g.lattice = frame.lattice();
  g.generators = std::move(generators);
  g.elements.reserve(keys.size());

  std::vector<std::array<std::int64_t, 2>> translations;
  int image_gcd = frame.units();
  for (const std::int64_t key : keys) {
    const auto e = frame.from_key(key);
    g.elements.push_back(frame.decode(e));
    image_gcd = std::gcd(image_gcd, e.j);
    if (e.j == 0) translations.push_back({e.a, e.b});
  }

  TorsionSubgroup& t = g.torsion_part;
  t.lattice = frame.lattice();
  for (const auto& v : translations) {
    t.elements.emplace_back(frame.lattice(), make_rational(v[0], frame.level()),
                            make_rational(v[1], frame.level()));
  }
  t.invariant_factors = torsion_invariant_factors(translations, frame.level());
  if (t.invariant_factors.first * t.invariant_factors.second !=
      Integer(static_cast<unsigned long>(t.elements.size()))) {
    throw Error("translation part is not closed");
  }
  if (t.invariant_factors.first > 1) {
    const auto [beta, beta_prime] = generator_pair(t);
    t.generators = {beta, beta_prime};
  } else if (t.elements.size() > 1) {
    for (const auto& p : t.elements) {
      if (Integer(static_cast<unsigned long>(t.elements.size())) == p.order()) {
        t.generators = {p};
        break;
      }
    }
  }

  g.unit_part_order = frame.units() / image_gcd;
  if (g.elements.size() != t.elements.size() * static_cast<std::size_t>(g.unit_part_order)) {
    throw Error("|G| != |G_T| * |G_0|");
  }
  return g;
}

}  // namespace detail

FiniteSubgroup closure(const std::vector<AffineAut>& gens, std::size_t cap) {
  const LatticeClass lattice = gens.empty() ? LatticeClass::generic : gens.front().lattice;
  Integer level = 1;
  for (const auto& g : gens) {
    if (g.lattice != lattice) throw TagMismatchError("generators live on different lattices");
    level = lcm(level, g.beta.order());
  }
  if (level > Integer(static_cast<unsigned long>(cap))) {
    throw CapExceededError("translation exponent " + level.get_str() + " exceeds cap " +
                           std::to_string(cap));
  }
  const detail::CompactFrame frame(lattice, level.get_si());
  std::vector<detail::CompactFrame::Elem> enc;
  enc.reserve(gens.size());
  for (const auto& g : gens) enc.push_back(frame.encode(g));

  std::unordered_set<std::int64_t> seen{0};
  std::vector<std::int64_t> keys{0};
  std::deque<detail::CompactFrame::Elem> frontier{detail::CompactFrame::Elem{}};
  while (!frontier.empty()) {
    const auto cur = frontier.front();
    frontier.pop_front();
    for (const auto& s : enc) {
      const auto next = frame.mul(cur, s);
      const std::int64_t key = frame.key(next);
      if (seen.insert(key).second) {
        if (seen.size() > cap) {
          throw CapExceededError("group closure exceeds cap " + std::to_string(cap));
        }
        keys.push_back(key);
        frontier.push_back(next);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  return detail::subgroup_from_keys(frame, keys, gens);
}

std::pair<TorsionSubgroup, int> decompose(const FiniteSubgroup& group) {
  return {group.torsion_part, group.unit_part_order};
}

namespace {

std::int64_t as_int(const Integer& z) { return z.get_si(); }

std::array<std::int64_t, 2> at_level(const TorsionPoint& p, std::int64_t level) {
  const Rational u = p.u() * level, v = p.v() * level;
  return {u.get_num().get_si(), v.get_num().get_si()};
}

}  // namespace

std::pair<TorsionPoint, TorsionPoint> generator_pair(const TorsionSubgroup& torsion) {
  const auto& [d1, d2] = torsion.invariant_factors;
  if (d1 <= 1) throw UndefinedActionError("translation part is cyclic");
  const std::int64_t level = as_int(d2);

  const TorsionPoint* beta_prime = nullptr;
  for (const auto& p : torsion.elements) {
    if (p.order() == d2) {
      beta_prime = &p;
      break;
    }
  }
  if (!beta_prime) throw Error("no element of maximal order");

  std::vector<const TorsionPoint*> by_order;
  for (const auto& p : torsion.elements) by_order.push_back(&p);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [](const TorsionPoint* a, const TorsionPoint* b) { return a->order() < b->order(); });
  const auto target = torsion.invariant_factors;
  for (const TorsionPoint* cand : by_order) {
    if (cand->order() < d1) continue;
    const auto f = torsion_invariant_factors({at_level(*cand, level), at_level(*beta_prime, level)},
                                             level);
    if (f == target) return {*cand, *beta_prime};
  }
  throw Error("no generating pair found");
}

IntMatrix2 action_matrix(const FiniteSubgroup& group) {
  if (group.unit_part_order == 1) throw UndefinedActionError("group has no rotation part");
  if (group.torsion_part.invariant_factors.first <= 1) {
    throw UndefinedActionError("translation part has rank " +
                               std::string(group.torsion_part.order() > 1 ? "1" : "0"));
  }
  const auto [beta, beta_prime] = generator_pair(group.torsion_part);
  return action_matrix(group, beta, beta_prime);
}

IntMatrix2 action_matrix(const FiniteSubgroup& group, const TorsionPoint& beta,
                         const TorsionPoint& beta_prime) {
  if (group.unit_part_order == 1) throw UndefinedActionError("group has no rotation part");
  const std::int64_t m = as_int(beta.order());
  const std::int64_t mp = as_int(beta_prime.order());
  const std::int64_t level = std::lcm(m, mp);
  const auto vb = at_level(beta, level);
  const auto vbp = at_level(beta_prime, level);

  // discrete log table for <beta> + <beta'>
  std::unordered_map<std::int64_t, std::array<std::int64_t, 2>> coords;
  for (std::int64_t x = 0; x < m; ++x) {
    for (std::int64_t y = 0; y < mp; ++y) {
      const std::int64_t a = mod_floor(x * vb[0] + y * vbp[0], level);
      const std::int64_t b = mod_floor(x * vb[1] + y * vbp[1], level);
      if (!coords.emplace(a * level + b, std::array<std::int64_t, 2>{x, y}).second) {
        throw UndefinedActionError("beta and beta' do not span a direct sum");
      }
    }
  }
  const int j = unit_order(group.lattice) / group.unit_part_order;
  const auto solve = [&](const TorsionPoint& p) {
    const auto v = at_level(unit_action(j, p), level);
    const auto it = coords.find(v[0] * level + v[1]);
    if (it == coords.end()) {
      throw UndefinedActionError("rotation image of " + p.to_string() +
                                 " leaves the span of beta, beta'");
    }
    return it->second;
  };
  const auto c1 = solve(beta);
  const auto c2 = solve(beta_prime);
  return IntMatrix2::rows(c1[0], c2[0], c1[1], c2[1]);
}

IntMatrix2 closed_form_action(const IntMatrix2& m, int l) {
  const int eps = rotation_epsilon(l);
  const Integer d = m.det();
  if (d != 1 && d != -1) throw NotUnimodularError("matrix " + m.to_string() + " is not unimodular");
  const Integer &p = m.p, &q = m.q, &r = m.r, &s = m.s;
  return IntMatrix2::rows(d * (-p * r + eps * q * r - q * s), d * (-r * r + eps * s * r - s * s),
                          d * (p * p - eps * p * q + q * q), d * (p * r - eps * p * s + q * s));
}

IntMatrix2 action_matrix_from_base_change(const IntMatrix2& m, int l) {
  const int eps = rotation_epsilon(l);
  const IntMatrix2 b = IntMatrix2::rows(0, -1, 1, -eps);
  const IntMatrix2 a = mat_inv_unimodular(m) * b * m;
  if (!(a == closed_form_action(m, l))) {
    throw Error("conjugated unit matrix disagrees with its closed form");
  }
  return a;
}

bool congruent_mod_orders(const IntMatrix2& a, const IntMatrix2& b, const Integer& m1,
                          const Integer& m2) {
  const auto divides = [](const Integer& n, const Integer& x) {
    return sgn(n) == 0 ? sgn(x) == 0 : x % n == 0;
  };
  return divides(m1, a.p - b.p) && divides(m1, a.r - b.r) && divides(m2, a.q - b.q) &&
         divides(m2, a.s - b.s);
}

GroupLabel classify(const FiniteSubgroup& group) {
  const auto& t = group.torsion_part;
  const std::int64_t d1 = as_int(t.invariant_factors.first);
  const std::int64_t d2 = as_int(t.invariant_factors.second);
  const int lp = group.unit_part_order;

  if (group.is_abelian()) return GroupLabel::abelian({d1, d2, lp});

  if (lp == 2) {
    if (d1 == 1) {
      if (d2 < 3) throw ClassificationError("non-abelian group with |G_T| < 3 and |G_0| = 2");
      return GroupLabel::dihedral(d2);
    }
    return GroupLabel::bidihedral(d1, d2);
  }
  if (lp != 3 && lp != 4 && lp != 6) {
    throw ClassificationError("non-abelian group with |G_0| = " + std::to_string(lp));
  }

  const int j = unit_order(group.lattice) / lp;
  const int eps = rotation_epsilon(lp);
  if (d1 == 1) {
    const std::int64_t k = d2;
    if (t.generators.empty()) throw ClassificationError("non-abelian group with trivial G_T");
    const TorsionPoint& beta = t.generators.front();
    const TorsionPoint image = unit_action(j, beta);
    for (std::int64_t h = 0; h < k; ++h) {
      if (beta.times(h) == image) {
        if ((h * h + eps * h + 1) % k != 0) {
          throw ClassificationError("action exponent " + std::to_string(h) +
                                    " violates k | h^2 + eps*h + 1");
        }
        return GroupLabel::exc1(k, lp).with_h(h);
      }
    }
    throw ClassificationError("rotation does not normalize the cyclic translation part");
  }

  const std::int64_t k = d2 / d1;
  if (!exists_h(k, lp)) {
    throw ClassificationError("k = " + std::to_string(k) + " admits no action exponent for l = " +
                              std::to_string(lp));
  }
  return GroupLabel::exc2(d1, k, lp);
}

FiniteGroup to_finite_group(const FiniteSubgroup& group) {
  Integer level = 1;
  for (const auto& g : group.elements) level = lcm(level, g.beta.order());
  const detail::CompactFrame frame(group.lattice, level.get_si());
  std::vector<detail::CompactFrame::Elem> enc;
  std::unordered_map<std::int64_t, FiniteGroup::Index> index;
  enc.reserve(group.elements.size());
  for (const auto& g : group.elements) {
    enc.push_back(frame.encode(g));
    index.emplace(frame.key(enc.back()), static_cast<FiniteGroup::Index>(enc.size() - 1));
  }
  if (frame.key(enc.front()) != 0) throw Error("identity is not the first element");
  return FiniteGroup::from_multiplication(
      enc.size(), [&](FiniteGroup::Index a, FiniteGroup::Index b) {
        const auto it = index.find(frame.key(frame.mul(enc[a], enc[b])));
        if (it == index.end()) throw Error("element set is not closed");
        return it->second;
      });
}

bool iso_check(const FiniteSubgroup& group, const GroupLabel& label, std::size_t bound) {
  if (group.order() > bound) {
    throw CapExceededError("isomorphism check bound " + std::to_string(bound) + " exceeded by |G| = " +
                           std::to_string(group.order()));
  }
  if (static_cast<std::int64_t>(group.order()) != label.order()) return false;
  const FiniteGroup g = to_finite_group(group);

  std::vector<std::int64_t> hs;
  if (label.h()) {
    hs.push_back(*label.h());
  } else if (const auto* e = label.as_exc1()) {
    hs = admissible_h_values(e->k, e->l);
  } else if (const auto* e2 = label.as_exc2()) {
    hs = admissible_h_values(e2->k, e2->l);
  }
  if (label.as_exc1() || label.as_exc2()) {
    for (const std::int64_t h : hs) {
      if (isomorphic(g, canonical_group(label, h))) return true;
    }
    return false;
  }
  return isomorphic(g, canonical_group(label));
}

}  // namespace ellgal
