#include "ellgal/realizability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ellgal/errors.hpp"

namespace ellgal {

int rotation_epsilon(int l) {
  switch (l) {
    case 3: return 1;
    case 4: return 0;
    case 6: return -1;
    default: throw UnsupportedRotationError("rotation order must be 3, 4 or 6, got " + std::to_string(l));
  }
}

namespace {

std::int64_t form_value(std::int64_t h, int eps, std::int64_t k) {
  // h^2 + eps*h + 1 mod k without overflow for k < 2^31
  const std::int64_t hh = mod_floor(h, k);
  return mod_floor(mod_floor(hh * hh, k) + eps * hh + 1, k);
}

void require_positive(std::int64_t k) {
  if (k < 1) throw PreconditionError("k must be positive, got " + std::to_string(k));
}

std::int64_t isqrt_ceil(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

// a*x + b*y = gcd(a, b)
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  std::int64_t x1 = 0, y1 = 0;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

LatticeClass lattice_for(int l) {
  return l == 4 ? LatticeClass::square : LatticeClass::hexagonal;
}

TorsionPoint point(LatticeClass lattice, const Rational& u, const Rational& v) {
  return TorsionPoint(lattice, u, v);
}

// ((h + eps) + e_l) / n written on the lattice carrying e_l.
TorsionPoint exceptional_beta(std::int64_t h, int l, std::int64_t n) {
  const int eps = rotation_epsilon(l);
  const QuadElem beta(RingTag(l), make_rational(h + eps, n), make_rational(1, n));
  return TorsionPoint::from_quad(lattice_for(l), beta);
}

bool in_rotation_list(const GroupLabel& label) {
  const auto& list = rotation_abelian_labels();
  return std::find(list.begin(), list.end(), label) != list.end();
}

}  // namespace

std::optional<std::int64_t> exists_h(std::int64_t k, int l) {
  require_positive(k);
  const int eps = rotation_epsilon(l);
  for (std::int64_t h = 0; h < k; ++h) {
    if (form_value(h, eps, k) == 0) return h;
  }
  return std::nullopt;
}

std::vector<std::int64_t> admissible_h_values(std::int64_t k, int l) {
  require_positive(k);
  const int eps = rotation_epsilon(l);
  std::vector<std::int64_t> out;
  for (std::int64_t h = 0; h < k; ++h) {
    if (form_value(h, eps, k) == 0) out.push_back(h);
  }
  return out;
}

std::optional<std::int64_t> nondegenerate_h(std::int64_t k, int l) {
  for (const std::int64_t h : admissible_h_values(k, l)) {
    if (mod_floor(h - 1, k) != 0) return h;
  }
  return std::nullopt;
}

std::optional<std::pair<std::int64_t, std::int64_t>> norm_form_rep(std::int64_t k, int l) {
  require_positive(k);
  const int eps = rotation_epsilon(l);
  const std::int64_t bound = isqrt_ceil(2 * k);
  const auto hit = [&](std::int64_t a, std::int64_t b) {
    return a * a - eps * a * b + b * b == k && std::gcd(a, b) == 1;
  };
  for (std::int64_t a = 0; a <= bound; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) {
      if (hit(a, b)) return std::pair{a, b};
    }
  }
  for (std::int64_t a = -bound; a <= bound; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      if (hit(a, b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool prime_condition(std::int64_t k, int l) {
  require_positive(k);
  rotation_epsilon(l);
  const auto ok = [l](std::int64_t p) {
    if (l == 4) return p == 2 || p % 4 == 1;
    return p == 3 || p % 3 == 1;
  };
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    if (!ok(p)) return false;
    while (k % p == 0) k /= p;
  }
  return k == 1 || ok(k);
}

bool check_condition_e(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t q,
                       std::int64_t r, std::int64_t s, std::int64_t m, std::int64_t k, int l) {
  const int eps = rotation_epsilon(l);
  if (std::gcd(a, b) != 1) {
    throw PreconditionError("gcd(a, b) = " + std::to_string(std::gcd(a, b)) + ", expected 1");
  }
  if (p * s - q * r != 1) {
    throw PreconditionError("ps - qr = " + std::to_string(p * s - q * r) + ", expected 1");
  }
  const std::int64_t mk = m * k;
  const std::int64_t g1 = std::gcd(std::gcd(a * p - b * q, b * p - eps * b * q + a * q), mk);
  const std::int64_t g2 = std::gcd(std::gcd(a * r - b * s, b * r - eps * b * s + a * s), mk);
  return g1 == k && g2 == 1;
}

ScaleData lemma_scale_data(std::int64_t m, std::int64_t k, int l, std::int64_t d) {
  const int eps = rotation_epsilon(l);
  if (m < 1) throw PreconditionError("m must be positive");
  const auto ab = norm_form_rep(k, l);
  if (!ab) {
    throw NotRealizableError(std::to_string(k) + " is not of the form a^2 - eps*a*b + b^2 with gcd(a, b) = 1");
  }
  const std::int64_t mk = m * k;
  if (d < 1 || std::gcd(d, mk) != 1) {
    throw PreconditionError("d must be positive and coprime to mk = " + std::to_string(mk));
  }
  ScaleData out;
  out.a = ab->first;
  out.b = ab->second;
  out.d = d;
  out.h = exists_h(k, l).value_or(0);
  out.p = out.a - eps * out.b;
  out.q = -out.b;
  // s*a + (r - eps*s)*b = 1
  std::int64_t x = 0, y = 0;
  ext_gcd(out.a, out.b, x, y);
  out.s = x;
  out.r = y + eps * x;
  if (out.p * out.s - out.q * out.r != 1) throw Error("scale data is not unimodular");

  const RingTag ring(l);
  out.lambda = QuadElem(ring, make_rational(d * out.a, mk), make_rational(d * out.b, mk));
  const LatticeClass lattice = lattice_for(l);
  const auto combo = [&](std::int64_t u, std::int64_t v) {
    return TorsionPoint::from_quad(lattice,
                                   QuadElem(ring, make_rational(d * u, mk), make_rational(d * v, mk)));
  };
  out.beta = combo(out.a * out.p - out.b * out.q, out.b * out.p - eps * out.b * out.q + out.a * out.q);
  out.beta_prime =
      combo(out.a * out.r - out.b * out.s, out.b * out.r - eps * out.b * out.s + out.a * out.s);
  out.condition_e = check_condition_e(out.a, out.b, out.p, out.q, out.r, out.s, m, k, l);
  return out;
}

const std::vector<GroupLabel>& rotation_abelian_labels() {
  static const std::vector<GroupLabel> labels{
      GroupLabel::cyclic(2),        GroupLabel::abelian({2, 2}), GroupLabel::abelian({2, 2, 2}),
      GroupLabel::cyclic(3),        GroupLabel::abelian({3, 3}), GroupLabel::cyclic(4),
      GroupLabel::abelian({2, 4}),  GroupLabel::cyclic(6)};
  return labels;
}

AdmissibilityReport subgroup_admissible(const GroupLabel& label) {
  AdmissibilityReport rep;
  rep.label = label;
  if (const auto* a = label.as_abelian()) {
    if (a->factors.size() <= 2 || in_rotation_list(label)) {
      rep.subgroup_realizable = true;
    } else {
      rep.failure_reason = "abelian of rank " + std::to_string(a->factors.size()) +
                           " is neither a translation group nor in the rotation list";
    }
    return rep;
  }
  if (label.as_dihedral() || label.as_bidihedral()) {
    rep.subgroup_realizable = true;
    return rep;
  }
  if (const auto* e = label.as_exc1()) {
    rep.h = nondegenerate_h(e->k, e->l);
    if (rep.h) {
      rep.subgroup_realizable = true;
      rep.norm_form_pair = norm_form_rep(e->k, e->l);
    } else if (exists_h(e->k, e->l)) {
      rep.failure_reason = "every h with k | h^2 + eps*h + 1 is 1 mod k, so the group is abelian";
    } else {
      rep.failure_reason = "no h with " + std::to_string(e->k) + " | h^2 + eps*h + 1";
    }
    return rep;
  }
  const auto& e = *label.as_exc2();
  rep.h = exists_h(e.k, e.l);
  if (rep.h) {
    rep.subgroup_realizable = true;
    rep.norm_form_pair = norm_form_rep(e.k, e.l);
  } else {
    rep.failure_reason = "no h with " + std::to_string(e.k) + " | h^2 + eps*h + 1";
  }
  return rep;
}

AdmissibilityReport galois_admissible(const GroupLabel& label) {
  AdmissibilityReport rep = subgroup_admissible(label);
  if (!rep.subgroup_realizable) return rep;
  if (label.order() < 3) {
    rep.failure_reason = "|G| >= 3 fails";
    return rep;
  }
  if (label.is_abelian() && !in_rotation_list(label)) {
    rep.failure_reason = "|G_0| = 1";
    return rep;
  }
  rep.galois_realizable = true;
  return rep;
}

Witness realize(const GroupLabel& label) {
  const AdmissibilityReport rep = subgroup_admissible(label);
  if (!rep.subgroup_realizable) {
    throw NotRealizableError(label.to_string() + ": " + rep.failure_reason);
  }
  Witness w;
  const auto rot = [&](int j) { w.generators.push_back(AffineAut::rotation(w.lattice, j)); };
  const auto shift = [&](const Rational& u, const Rational& v) {
    w.generators.push_back(AffineAut::translation(point(w.lattice, u, v)));
  };

  if (const auto* a = label.as_abelian()) {
    if (in_rotation_list(label)) {
      const auto& f = a->factors;
      if (f == std::vector<std::int64_t>{2}) {
        rot(1);
      } else if (f == std::vector<std::int64_t>{2, 2}) {
        rot(1);
        shift(make_rational(1, 2), 0);
      } else if (f == std::vector<std::int64_t>{2, 2, 2}) {
        rot(1);
        shift(make_rational(1, 2), 0);
        shift(0, make_rational(1, 2));
      } else if (f == std::vector<std::int64_t>{3}) {
        w.lattice = LatticeClass::hexagonal;
        rot(2);
      } else if (f == std::vector<std::int64_t>{3, 3}) {
        // (1 + 2 e3) / 3 is fixed by e3 modulo the lattice
        w.lattice = LatticeClass::hexagonal;
        rot(2);
        shift(make_rational(2, 3), make_rational(2, 3));
      } else if (f == std::vector<std::int64_t>{4}) {
        w.lattice = LatticeClass::square;
        rot(1);
      } else if (f == std::vector<std::int64_t>{2, 4}) {
        w.lattice = LatticeClass::square;
        rot(1);
        shift(make_rational(1, 2), make_rational(1, 2));
      } else {
        w.lattice = LatticeClass::hexagonal;
        rot(1);
      }
      return w;
    }
    // pure translations Z_d1 + Z_d2
    const auto& f = a->factors;
    if (f.size() == 1) shift(make_rational(1, f[0]), 0);
    if (f.size() == 2) {
      shift(0, make_rational(1, f[0]));
      shift(make_rational(1, f[1]), 0);
    }
    return w;
  }
  if (const auto* d = label.as_dihedral()) {
    rot(1);
    shift(make_rational(1, d->n), 0);
    return w;
  }
  if (const auto* b = label.as_bidihedral()) {
    rot(1);
    shift(make_rational(1, b->n), 0);
    shift(0, make_rational(1, b->m));
    return w;
  }

  std::int64_t m = 1, k = 1;
  int l = 3;
  if (const auto* e = label.as_exc1()) {
    k = e->k;
    l = e->l;
  } else {
    const auto& e2 = *label.as_exc2();
    m = e2.m;
    k = e2.k;
    l = e2.l;
  }
  w.lattice = lattice_for(l);
  w.generators.push_back(AffineAut::rotation_of_order(w.lattice, l));
  if (m > 1) {
    shift(make_rational(1, m), 0);
    shift(0, make_rational(1, m));
  }
  w.generators.push_back(AffineAut::translation(exceptional_beta(*rep.h, l, m * k)));
  if (rep.norm_form_pair) w.scale_data = lemma_scale_data(m, k, l);
  return w;
}

}  // namespace ellgal
