#include "ellgal/function_field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ellgal/errors.hpp"

namespace ellgal {

Curve::Curve(Poly f) : f_(std::move(f)) {
  if (f_.degree() != 3 || !f_.lead().is_one()) {
    throw PreconditionError("curve needs a monic cubic, got " + f_.to_string());
  }
  if (poly_gcd(f_, f_.derivative()).degree() > 0) {
    throw DegeneracyError("singular curve: " + f_.to_string() + " has a repeated root");
  }
}

Curve Curve::weierstrass(RingTag ring, const Rational& p, const Rational& q) {
  return Curve(Poly(ring, {QuadElem(ring, q), QuadElem(ring, p), QuadElem::zero(ring), QuadElem::one(ring)}));
}

Curve Curve::legendre(RingTag ring, const Rational& b) {
  const Poly x = Poly::x(ring);
  const Poly one = Poly::constant(ring, 1);
  return Curve(x * (x - one) * (x - Poly::constant(ring, b)));
}

bool Curve::contains(const QuadElem& x0, const QuadElem& y0) const {
  const QuadElem y = y0.in_ring(ring());
  return y * y == f_.eval(x0);
}

FFElem::FFElem(CurvePtr curve, RatFunc r, RatFunc s)
    : curve_(std::move(curve)), r_(std::move(r)), s_(std::move(s)) {
  if (!curve_) throw PreconditionError("function-field element without a curve");
}

FFElem FFElem::constant(CurvePtr curve, const QuadElem& c) {
  const RingTag ring = curve->ring();
  return FFElem(std::move(curve), RatFunc(Poly::constant(c.in_ring(ring))), RatFunc(ring));
}

FFElem FFElem::x(CurvePtr curve) {
  const RingTag ring = curve->ring();
  return FFElem(std::move(curve), RatFunc(Poly::x(ring)), RatFunc(ring));
}

FFElem FFElem::y(CurvePtr curve) {
  const RingTag ring = curve->ring();
  return FFElem(std::move(curve), RatFunc(ring), RatFunc(Poly::constant(ring, 1)));
}

void FFElem::require_same_curve(const FFElem& o) const {
  if (curve_ != o.curve_ && !(curve_->f() == o.curve_->f())) {
    throw TagMismatchError("function-field elements of different curves");
  }
}

FFElem FFElem::operator-() const { return FFElem(curve_, -r_, -s_); }

FFElem& FFElem::operator+=(const FFElem& o) {
  require_same_curve(o);
  r_ += o.r_;
  s_ += o.s_;
  return *this;
}

FFElem& FFElem::operator-=(const FFElem& o) {
  require_same_curve(o);
  r_ -= o.r_;
  s_ -= o.s_;
  return *this;
}

FFElem& FFElem::operator*=(const FFElem& o) {
  require_same_curve(o);
  // (r1 + s1 y)(r2 + s2 y) = r1 r2 + s1 s2 f + (r1 s2 + r2 s1) y
  RatFunc r = r_ * o.r_;
  if (!s_.is_zero() && !o.s_.is_zero()) r += s_ * o.s_ * RatFunc(curve_->f());
  RatFunc s = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  return *this;
}

RatFunc FFElem::norm() const {
  if (s_.is_zero()) return r_ * r_;
  return r_ * r_ - s_ * s_ * RatFunc(curve_->f());
}

FFElem FFElem::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in the function field");
  const RatFunc n = norm().inverse();
  return FFElem(curve_, r_ * n, -s_ * n);
}

FFElem& FFElem::operator/=(const FFElem& o) { return *this *= o.inverse(); }

FFElem FFElem::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  FFElem result = constant(curve_, QuadElem::one(curve_->ring()));
  FFElem base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::string FFElem::to_string() const {
  if (s_.is_zero()) return r_.to_string();
  const std::string ys = s_.is_constant() && s_.num().coeff(0).is_one() ? "y" : "(" + s_.to_string() + ")*y";
  if (r_.is_zero()) return ys;
  return r_.to_string() + " + " + ys;
}

namespace {

FFElem eval_poly(const Poly& p, const FFElem& at) {
  const CurvePtr& c = at.curve();
  if (p.is_zero()) return FFElem::constant(c, QuadElem::zero(c->ring()));
  FFElem acc = FFElem::constant(c, p.lead());
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc *= at;
    const QuadElem k = p.coeff(i);
    if (!k.is_zero()) acc += FFElem::constant(c, k);
  }
  return acc;
}

FFElem eval_ratfunc(const RatFunc& r, const FFElem& at) {
  if (r.is_polynomial()) {
    return eval_poly(r.num().scaled(r.den().coeff(0).inverse()), at);
  }
  return eval_poly(r.num(), at) / eval_poly(r.den(), at);
}

}  // namespace

AutMap AutMap::identity(const CurvePtr& curve) { return {FFElem::x(curve), FFElem::y(curve)}; }

bool AutMap::lands_on_curve() const {
  return (eta * eta - eval_poly(xi.curve()->f(), xi)).is_zero();
}

bool AutMap::is_identity() const { return *this == identity(xi.curve()); }


FFElem pullback(const FFElem& e, const AutMap& m) {
  FFElem out = eval_ratfunc(e.r(), m.xi);
  if (!e.s().is_zero()) out += eval_ratfunc(e.s(), m.xi) * m.eta;
  return out;
}

AutMap compose(const AutMap& m1, const AutMap& m2) { return {pullback(m1.xi, m2), pullback(m1.eta, m2)}; }

int aut_order(const AutMap& m, int cap) {
  AutMap cur = m;
  for (int n = 1; n <= cap; ++n) {
    if (cur.is_identity()) return n;
    cur = compose(cur, m);
  }
  throw CapExceededError("map has no finite order up to " + std::to_string(cap));
}

CurvePoint curve_neg(const CurvePoint& p) {
  if (!p) return p;
  return std::pair{p->first, -p->second};
}

CurvePoint curve_add(const Curve& curve, const CurvePoint& p, const CurvePoint& q) {
  if (!p) return q;
  if (!q) return p;
  const RingTag ring = curve.ring();
  const QuadElem x1 = p->first.in_ring(ring), y1 = p->second.in_ring(ring);
  const QuadElem x2 = q->first.in_ring(ring), y2 = q->second.in_ring(ring);
  QuadElem lambda;
  if (x1 == x2) {
    if (!(y1 == y2) || y1.is_zero()) return std::nullopt;
    const auto& f = curve.f();
    lambda = f.derivative().eval(x1) / (QuadElem(ring, 2) * y1);
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  const QuadElem x3 = lambda * lambda - curve.a2() - x1 - x2;
  const QuadElem y3 = lambda * (x1 - x3) - y1;
  return std::pair{x3, y3};
}

std::optional<int> point_order(const Curve& curve, const CurvePoint& p, int cap) {
  CurvePoint cur = p;
  for (int n = 1; n <= cap; ++n) {
    if (!cur) return n;
    cur = curve_add(curve, cur, p);
  }
  return std::nullopt;
}

AutMap translation_map(const CurvePtr& curve, const CurvePoint& p) {
  if (!p) return AutMap::identity(curve);
  const RingTag ring = curve->ring();
  const QuadElem x0 = p->first.in_ring(ring), y0 = p->second.in_ring(ring);
  if (!curve->contains(x0, y0)) {
    throw NotOnCurveError("(" + x0.to_string() + ", " + y0.to_string() + ") is not on " + curve->to_string());
  }
  const FFElem x = FFElem::x(curve), y = FFElem::y(curve);
  const auto k = [&](const QuadElem& c) { return FFElem::constant(curve, c); };
  const FFElem lambda = (y - k(y0)) / (x - k(x0));
  const FFElem x3 = lambda * lambda - k(curve->a2()) - x - k(x0);
  const FFElem y3 = lambda * (x - x3) - y;
  return {x3, y3};
}

bool is_invariant(const FFElem& s, const AutMap& m) { return pullback(s, m) == s; }

int map_degree(const FFElem& s, const DegreeOptions& options) {
  if (s.is_constant()) throw PreconditionError("map_degree needs a nonconstant function");
  const RingTag ring = s.curve()->ring();
  std::mt19937_64 rng(options.seed);
  std::optional<int> degree;
  std::ostringstream seen;
  for (int i = 0; i < options.samples; ++i) {
    // explicit reductions keep the samples identical across standard libraries
    const long num = static_cast<long>(rng() % 2000001) - 1000000;
    const long den = static_cast<long>(rng() % 1000) + 1;
    const QuadElem c(ring, make_rational(num, den));
    const FFElem shifted = s - FFElem::constant(s.curve(), c);
    const int d = shifted.norm().map_degree();
    seen << (i ? ", " : "") << d;
    if (degree && *degree != d) {
      throw DegeneracyError("fiber degrees disagree across samples: " + seen.str());
    }
    degree = d;
  }
  return *degree;
}

FFElem evaluate(const BiPoly& F, const FFElem& s, const FFElem& t) {
  const CurvePtr& c = s.curve();
  std::vector<FFElem> sp{FFElem::constant(c, QuadElem::one(c->ring()))};
  std::vector<FFElem> tp = sp;
  for (int i = 1; i <= F.degree_s(); ++i) sp.push_back(sp.back() * s);
  for (int j = 1; j <= F.degree_t(); ++j) tp.push_back(tp.back() * t);
  FFElem acc = FFElem::constant(c, QuadElem::zero(c->ring()));
  for (const auto& [m, k] : F.terms()) {
    acc += FFElem::constant(c, k) * sp[static_cast<std::size_t>(m.first)] *
           tp[static_cast<std::size_t>(m.second)];
  }
  return acc;
}

bool verify_relation(const BiPoly& F, const FFElem& s, const FFElem& t) {
  return evaluate(F, s, t).is_zero();
}

std::vector<AutMap> map_closure(const CurvePtr& curve, const std::vector<AutMap>& generators,
                                std::size_t cap) {
  std::vector<AutMap> out{AutMap::identity(curve)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      AutMap next = compose(out[i], g);
      if (std::find(out.begin(), out.end(), next) == out.end()) {
        if (out.size() >= cap) throw CapExceededError("map closure exceeds " + std::to_string(cap));
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

FiniteGroup cayley_group(const std::vector<AutMap>& elements) {
  return FiniteGroup::from_multiplication(elements.size(), [&](FiniteGroup::Index a, FiniteGroup::Index b) {
    const AutMap p = compose(elements[a], elements[b]);
    const auto it = std::find(elements.begin(), elements.end(), p);
    if (it == elements.end()) throw Error("map set is not closed under composition");
    return static_cast<FiniteGroup::Index>(it - elements.begin());
  });
}

CoverCertificate verify_galois_cover(const CoverSpec& spec, const DegreeOptions& options, int order_cap) {
  CoverCertificate cert;
  const auto n = static_cast<std::size_t>(spec.expected_group.order());
  const auto add = [&](int id, bool ok, std::string detail) {
    cert.clauses.push_back({id, ok, std::move(detail)});
  };

  // (1)
  {
    bool ok = true;
    std::ostringstream os;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
      const AutMap& g = spec.generators[i];
      if (!g.lands_on_curve()) {
        ok = false;
        os << "generator " << i + 1 << " does not land on the curve; ";
        continue;
      }
      try {
        os << "generator " << i + 1 << " has order " << aut_order(g, order_cap) << "; ";
      } catch (const CapExceededError&) {
        ok = false;
        os << "generator " << i + 1 << " has no order <= " << order_cap << "; ";
      }
    }
    add(1, ok, os.str());
  }

  // (2)
  std::vector<AutMap> group;
  try {
    group = map_closure(spec.curve, spec.generators, std::max<std::size_t>(64, 2 * n));
    cert.group_order = group.size();
    if (group.size() != n) {
      add(2, false, "closure has order " + std::to_string(group.size()) + ", expected " + std::to_string(n));
    } else if (!isomorphic(cayley_group(group), canonical_group(spec.expected_group))) {
      add(2, false, "closure of order " + std::to_string(n) + " is not " + spec.expected_group.to_string());
    } else {
      add(2, true, "closure is " + spec.expected_group.to_string() + " of order " + std::to_string(n));
    }
  } catch (const Error& e) {
    add(2, false, e.what());
  }

  // (3)
  {
    bool ok = !group.empty();
    std::string detail = ok ? "s is fixed by all " + std::to_string(group.size()) + " elements" : "no group";
    for (std::size_t i = 0; i < group.size() && ok; ++i) {
      if (!is_invariant(spec.s, group[i])) {
        ok = false;
        detail = "s moved by " + group[i].to_string();
      }
    }
    add(3, ok, detail);
  }

  // (4)
  try {
    cert.degree = map_degree(spec.s, options);
    add(4, static_cast<std::size_t>(*cert.degree) == n,
        "deg s = " + std::to_string(*cert.degree) + ", |G| = " + std::to_string(n));
  } catch (const Error& e) {
    add(4, false, e.what());
  }

  // (5)
  {
    const bool rel = verify_relation(spec.F, spec.s, spec.t);
    const int dt = spec.F.degree_t();
    add(5, rel && static_cast<std::size_t>(dt) == n,
        std::string(rel ? "F(s, t) = 0" : "F(s, t) != 0") + ", deg_t F = " + std::to_string(dt));
  }

  // (6)
  {
    std::vector<FFElem> orbit;
    bool ok = !group.empty();
    for (const auto& g : group) {
      FFElem img = pullback(spec.t, g);
      if (std::find(orbit.begin(), orbit.end(), img) != orbit.end()) ok = false;
      orbit.push_back(std::move(img));
    }
    add(6, ok, ok ? "t has " + std::to_string(orbit.size()) + " distinct conjugates"
                  : "t has a nontrivial stabilizer");
  }

  cert.passed = std::all_of(cert.clauses.begin(), cert.clauses.end(), [](const ClauseResult& c) { return c.passed; });
  return cert;
}

std::optional<AutMap> find_stabilizing_automorphism(const FFElem& s, const std::vector<AutMap>& candidates) {
  for (const auto& m : candidates) {
    if (!m.is_identity() && is_invariant(s, m)) return m;
  }
  return std::nullopt;
}

std::vector<AutMap> rotation_translation_candidates(const CurvePtr& curve,
                                                    const std::vector<CurvePoint>& points) {
  const RingTag ring = curve->ring();
  std::vector<QuadElem> units{QuadElem::one(ring), -QuadElem::one(ring)};
  if (ring.has_zeta()) {
    const QuadElem z = QuadElem::zeta(ring);
    for (QuadElem p = z; !p.is_one(); p *= z) {
      if (std::find(units.begin(), units.end(), p) == units.end()) units.push_back(p);
      if (std::find(units.begin(), units.end(), -p) == units.end()) units.push_back(-p);
    }
  }
  std::vector<AutMap> rotations;
  const FFElem x = FFElem::x(curve), y = FFElem::y(curve);
  for (const auto& u : units) {
    for (const auto& v : units) {
      AutMap m{FFElem::constant(curve, u) * x, FFElem::constant(curve, v) * y};
      if (m.lands_on_curve()) rotations.push_back(std::move(m));
    }
  }
  std::vector<AutMap> out;
  for (const auto& p : points) {
    const AutMap tr = translation_map(curve, p);
    for (const auto& r : rotations) {
      AutMap c = compose(r, tr);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace ellgal
