#include "ellgal/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ellgal/errors.hpp"

namespace ellgal {

namespace {

std::string coeff_text(const QuadElem& c) {
  if (c.is_rational()) return c.a().get_str();
  return "(" + c.to_string() + ")";
}

}  // namespace

Poly::Poly(RingTag ring, std::vector<QuadElem> coeffs) : ring_(ring), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (!(c.ring() == ring_)) c = c.in_ring(ring_);
  }
  trim();
}

Poly Poly::constant(const QuadElem& c) { return Poly(c.ring(), {c}); }

Poly Poly::x(RingTag ring) { return Poly(ring, {QuadElem::zero(ring), QuadElem::one(ring)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::require_same_ring(const Poly& o) const {
  if (!(ring_ == o.ring_)) {
    throw TagMismatchError("polynomials over " + ring_.name() + " and " + o.ring_.name());
  }
}

QuadElem Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return QuadElem::zero(ring_);
  return c_[static_cast<std::size_t>(i)];
}

const QuadElem& Poly::lead() const {
  if (c_.empty()) throw DivisionByZeroError("zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_ring(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), QuadElem::zero(ring_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ring(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), QuadElem::zero(ring_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  require_same_ring(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<QuadElem> out(c_.size() + o.c_.size() - 1, QuadElem::zero(ring_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::scaled(const QuadElem& c) const {
  Poly out = *this;
  for (auto& x : out.c_) x *= c;
  out.trim();
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  require_same_ring(d);
  if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  Poly rem = *this;
  if (rem.degree() < d.degree()) return {Poly(ring_), rem};
  const QuadElem inv_lead = d.lead().inverse();
  std::vector<QuadElem> quot(static_cast<std::size_t>(rem.degree() - d.degree() + 1), QuadElem::zero(ring_));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const int shift = rem.degree() - d.degree();
    const QuadElem f = rem.lead() * inv_lead;
    quot[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= d.degree(); ++i) {
      rem.c_[static_cast<std::size_t>(i + shift)] -= f * d.c_[static_cast<std::size_t>(i)];
    }
    rem.trim();
  }
  return {Poly(ring_, std::move(quot)), rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(ring_);
  std::vector<QuadElem> out;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out.push_back(c_[i] * QuadElem(ring_, static_cast<long>(i)));
  }
  return Poly(ring_, std::move(out));
}

QuadElem Poly::eval(const QuadElem& at) const {
  QuadElem acc = QuadElem::zero(ring_);
  const QuadElem v = at.in_ring(ring_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const QuadElem& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c.is_one() && i > 0;
    if (!unit) os << coeff_text(c);
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RatFunc::RatFunc(const Poly& p) : num_(p), den_(Poly::constant(p.ring(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ring(), 1);
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const QuadElem inv = den_.lead().inverse();
  if (!inv.is_one()) {
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

int RatFunc::map_degree() const noexcept { return std::max(num_.degree(), den_.degree()); }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

BiPoly BiPoly::constant(const QuadElem& c) {
  BiPoly p(c.ring());
  p.add_term({0, 0}, c);
  return p;
}

BiPoly BiPoly::s(RingTag ring) {
  BiPoly p(ring);
  p.add_term({1, 0}, QuadElem::one(ring));
  return p;
}

BiPoly BiPoly::t(RingTag ring) {
  BiPoly p(ring);
  p.add_term({0, 1}, QuadElem::one(ring));
  return p;
}

void BiPoly::add_term(const Monomial& m, const QuadElem& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c.in_ring(ring_));
    return;
  }
  it->second += c.in_ring(ring_);
  if (it->second.is_zero()) terms_.erase(it);
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

int BiPoly::degree_s() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

QuadElem BiPoly::as_constant() const {
  if (terms_.size() != 1 || terms_.begin()->first != Monomial{0, 0}) {
    throw PreconditionError("expected a nonzero constant, got " + to_string());
  }
  return terms_.begin()->second;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly out(ring_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      out.add_term({m1.first + m2.first, m1.second + m2.second}, c1 * c2.in_ring(ring_));
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

BiPoly BiPoly::scaled(const QuadElem& c) const {
  BiPoly out(ring_);
  for (const auto& [m, x] : terms_) out.add_term(m, x * c.in_ring(ring_));
  return out;
}

BiPoly BiPoly::perturbed(const Monomial& m, const QuadElem& delta) const {
  BiPoly out = *this;
  out.add_term(m, delta);
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << coeff_text(c);
    if (m.first) os << "*s^" << m.first;
    if (m.second) os << "*t^" << m.second;
  }
  return os.str();
}

}  // namespace ellgal
