#include "ellgal/exact_arith.hpp"

#include <sstream>

#include "ellgal/errors.hpp"

namespace ellgal {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational frac_part(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(fl);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

RingTag::RingTag(int l) : l_(l) {
  if (l != 1 && l != 3 && l != 4 && l != 6) {
    throw PreconditionError("ring tag must be 1, 3, 4 or 6, got " + std::to_string(l));
  }
}

int RingTag::epsilon() const {
  switch (l_) {
    case 3: return 1;
    case 4: return 0;
    case 6: return -1;
    default: throw PreconditionError("epsilon is undefined for the rational ring");
  }
}

bool RingTag::same_field(RingTag other) const noexcept {
  const auto hex = [](int l) { return l == 3 || l == 6; };
  return l_ == other.l_ || (hex(l_) && hex(other.l_));
}

std::string RingTag::name() const {
  switch (l_) {
    case 3: return "Q(e3)";
    case 4: return "Q(e4)";
    case 6: return "Q(e6)";
    default: return "Q";
  }
}

QuadElem::QuadElem(RingTag ring, Rational a, Rational b)
    : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (!ring_.has_zeta() && sgn(b_) != 0) {
    throw PreconditionError("zeta component must vanish over Q");
  }
}

QuadElem QuadElem::zeta(RingTag ring) {
  if (!ring.has_zeta()) throw PreconditionError("Q has no adjoined root of unity");
  return QuadElem(ring, 0, 1);
}

void QuadElem::require_same_ring(const QuadElem& o) const {
  if (!(ring_ == o.ring_)) {
    throw TagMismatchError("ring tag mismatch: " + ring_.name() + " vs " + o.ring_.name());
  }
}

QuadElem QuadElem::in_ring(RingTag target) const {
  if (ring_ == target) return *this;
  if (is_rational()) return QuadElem(target, a_, 0);
  if (ring_.l() == 3 && target.l() == 6) {
    // a + b*e3 = a + b*(e6 - 1)
    return QuadElem(target, a_ - b_, b_);
  }
  if (ring_.l() == 6 && target.l() == 3) {
    // a + b*e6 = a + b*(1 + e3)
    return QuadElem(target, a_ + b_, b_);
  }
  throw TagMismatchError("cannot express " + to_string() + " over " + target.name());
}

QuadElem QuadElem::conj() const {
  if (!ring_.has_zeta()) return *this;
  // conj(zeta) = -epsilon - zeta
  const int eps = ring_.epsilon();
  return QuadElem(ring_, a_ - eps * b_, -b_);
}

Rational QuadElem::norm() const {
  if (!ring_.has_zeta()) return a_ * a_;
  const int eps = ring_.epsilon();
  return a_ * a_ - eps * a_ * b_ + b_ * b_;
}

QuadElem QuadElem::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw DivisionByZeroError("inverse of zero in " + ring_.name());
  const QuadElem c = conj();
  return QuadElem(ring_, c.a_ / n, c.b_ / n);
}

QuadElem QuadElem::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  QuadElem result = one(ring_);
  QuadElem base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  require_same_ring(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  require_same_ring(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  require_same_ring(o);
  if (!ring_.has_zeta()) {
    a_ *= o.a_;
    return *this;
  }
  // zeta^2 = -epsilon*zeta - 1
  const int eps = ring_.epsilon();
  const Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ - bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ - eps * bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  require_same_ring(o);
  return *this *= o.inverse();
}

std::string QuadElem::to_string() const {
  std::ostringstream os;
  if (sgn(b_) == 0) {
    os << a_;
  } else if (sgn(a_) == 0) {
    os << b_ << "*w";
  } else {
    os << a_ << (sgn(b_) < 0 ? " - " : " + ") << abs(b_) << "*w";
  }
  return os.str();
}

std::size_t QuadElem::hash() const {
  const std::hash<std::string> h;
  return h(a_.get_str()) * 31u + h(b_.get_str()) + static_cast<std::size_t>(ring_.l());
}

std::ostream& operator<<(std::ostream& os, const QuadElem& u) { return os << u.to_string(); }

QuadElem quad_mul(const QuadElem& u, const QuadElem& v) { return u * v; }
Rational quad_norm(const QuadElem& u) { return u.norm(); }

std::string IntMatrix2::to_string() const {
  std::ostringstream os;
  os << "(" << p << ", " << r << "; " << q << ", " << s << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) { return os << m.to_string(); }

IntMatrix2 mat_mul(const IntMatrix2& a, const IntMatrix2& b) {
  return IntMatrix2::rows(a.p * b.p + a.r * b.q, a.p * b.r + a.r * b.s,
                          a.q * b.p + a.s * b.q, a.q * b.r + a.s * b.s);
}

IntMatrix2 mat_inv_unimodular(const IntMatrix2& m) {
  const Integer d = m.det();
  if (d != 1 && d != -1) {
    throw NotUnimodularError("matrix " + m.to_string() + " has determinant " + d.get_str());
  }
  // inverse = adj / det, and 1/det = det for det = +-1
  return IntMatrix2::rows(d * m.s, -d * m.r, -d * m.q, d * m.p);
}

IntMatrix2 mat_pow(const IntMatrix2& m, std::int64_t n) {
  if (n < 0) return mat_pow(mat_inv_unimodular(m), -n);
  IntMatrix2 result = IntMatrix2::identity();
  IntMatrix2 base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

}  // namespace ellgal
