#pragma once

// Exact arithmetic: GMP-backed integers and rationals, elements of the
// quadratic cyclotomic fields Q(e3) = Q(e6) and Q(e4), and 2x2 integer
// matrices.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace ellgal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den; throws DivisionByZeroError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Representative of q modulo 1 in [0, 1).
Rational frac_part(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor-mod into [0, n) for n > 0.
std::int64_t mod_floor(std::int64_t a, std::int64_t n);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Selects the adjoined root of unity. l = 1 means plain Q.
class RingTag {
 public:
  constexpr RingTag() = default;
  /// Throws PreconditionError unless l is 1, 3, 4 or 6.
  explicit RingTag(int l);

  static RingTag rationals() { return RingTag(1); }
  static RingTag e3() { return RingTag(3); }
  static RingTag e4() { return RingTag(4); }
  static RingTag e6() { return RingTag(6); }

  int l() const noexcept { return l_; }
  bool has_zeta() const noexcept { return l_ != 1; }
  /// zeta^2 + epsilon*zeta + 1 = 0 with epsilon = 1, 0, -1 for l = 3, 4, 6.
  int epsilon() const;
  /// Q(e3) and Q(e6) are the same field.
  bool same_field(RingTag other) const noexcept;

  std::string name() const;

  friend bool operator==(RingTag, RingTag) = default;

 private:
  int l_ = 1;
};

/// a + b*zeta with rational components.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(RingTag ring, Rational a, Rational b = 0);
  explicit QuadElem(Rational a) : a_(std::move(a)) {}

  static QuadElem zeta(RingTag ring);
  static QuadElem zero(RingTag ring) { return QuadElem(ring, 0, 0); }
  static QuadElem one(RingTag ring) { return QuadElem(ring, 1, 0); }

  RingTag ring() const noexcept { return ring_; }
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Same value written over another tag: Q embeds everywhere, and
  /// e6 = 1 + e3 converts between the two hexagonal tags.
  QuadElem in_ring(RingTag target) const;

  QuadElem conj() const;
  Rational norm() const;
  /// Throws DivisionByZeroError on zero.
  QuadElem inverse() const;
  QuadElem pow(std::int64_t n) const;

  QuadElem operator-() const { return QuadElem(ring_, -a_, -b_); }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem u, const QuadElem& v) { return u += v; }
  friend QuadElem operator-(QuadElem u, const QuadElem& v) { return u -= v; }
  friend QuadElem operator*(QuadElem u, const QuadElem& v) { return u *= v; }
  friend QuadElem operator/(QuadElem u, const QuadElem& v) { return u /= v; }

  friend bool operator==(const QuadElem& u, const QuadElem& v) {
    return u.ring_ == v.ring_ && u.a_ == v.a_ && u.b_ == v.b_;
  }

  /// Lexicographic on (a, b); only meaningful within one ring.
  friend bool operator<(const QuadElem& u, const QuadElem& v) {
    if (u.a_ != v.a_) return u.a_ < v.a_;
    return u.b_ < v.b_;
  }

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void require_same_ring(const QuadElem& o) const;

  RingTag ring_;
  Rational a_ = 0;
  Rational b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& u);

QuadElem quad_mul(const QuadElem& u, const QuadElem& v);
Rational quad_norm(const QuadElem& u);

/// (p r; q s): columns (p, q) and (r, s).
struct IntMatrix2 {
  Integer p = 1;
  Integer r = 0;
  Integer q = 0;
  Integer s = 1;

  static IntMatrix2 identity() { return {}; }
  static IntMatrix2 rows(Integer p, Integer r, Integer q, Integer s) {
    return {std::move(p), std::move(r), std::move(q), std::move(s)};
  }

  Integer det() const { return p * s - q * r; }
  bool in_sl2() const { return det() == 1; }
  bool in_gl2() const {
    const Integer d = det();
    return d == 1 || d == -1;
  }

  IntMatrix2 operator-() const { return rows(-p, -r, -q, -s); }
  friend bool operator==(const IntMatrix2& a, const IntMatrix2& b) {
    return a.p == b.p && a.r == b.r && a.q == b.q && a.s == b.s;
  }

  std::string to_string() const;
};

IntMatrix2 mat_mul(const IntMatrix2& a, const IntMatrix2& b);
inline IntMatrix2 operator*(const IntMatrix2& a, const IntMatrix2& b) { return mat_mul(a, b); }
inline Integer mat_det(const IntMatrix2& m) { return m.det(); }
/// Throws NotUnimodularError unless det = +-1.
IntMatrix2 mat_inv_unimodular(const IntMatrix2& m);
/// Non-negative powers; negative powers need a unimodular matrix.
IntMatrix2 mat_pow(const IntMatrix2& m, std::int64_t n);

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

}  // namespace ellgal
