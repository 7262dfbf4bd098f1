#pragma once

// Univariate polynomials and rational functions in x over Q or Q(zeta), and
// bivariate polynomials in formal variables (s, t).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellgal/exact_arith.hpp"

namespace ellgal {

class Poly {
 public:
  explicit Poly(RingTag ring = RingTag()) : ring_(ring) {}
  /// Coefficients from the constant term upwards.
  Poly(RingTag ring, std::vector<QuadElem> coeffs);

  static Poly constant(const QuadElem& c);
  static Poly constant(RingTag ring, const Rational& c) { return constant(QuadElem(ring, c)); }
  static Poly x(RingTag ring);

  RingTag ring() const noexcept { return ring_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  QuadElem coeff(int i) const;
  const QuadElem& lead() const;
  const std::vector<QuadElem>& coeffs() const noexcept { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly scaled(const QuadElem& c) const;
  Poly pow(unsigned n) const;

  /// Throws DivisionByZeroError on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly monic() const;
  Poly derivative() const;
  QuadElem eval(const QuadElem& at) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  void require_same_ring(const Poly& o) const;

  RingTag ring_;
  std::vector<QuadElem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// num / den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  explicit RatFunc(RingTag ring = RingTag()) : num_(ring), den_(Poly::constant(ring, 1)) {}
  RatFunc(const Poly& p);  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZeroError when den = 0.
  RatFunc(Poly num, Poly den);

  RingTag ring() const noexcept { return num_.ring(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Degree as a map P^1 -> P^1: max(deg num, deg den).
  int map_degree() const noexcept;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

/// Polynomial in formal s, t: (i, j) -> coefficient of s^i t^j.
class BiPoly {
 public:
  using Monomial = std::pair<int, int>;

  explicit BiPoly(RingTag ring = RingTag()) : ring_(ring) {}
  static BiPoly constant(const QuadElem& c);
  static BiPoly s(RingTag ring);
  static BiPoly t(RingTag ring);

  RingTag ring() const noexcept { return ring_; }
  const std::map<Monomial, QuadElem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree_t() const;
  int degree_s() const;
  /// Throws unless the polynomial is a nonzero constant.
  QuadElem as_constant() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  BiPoly scaled(const QuadElem& c) const;

  /// Copy with one coefficient changed by delta (the term is created if absent).
  BiPoly perturbed(const Monomial& m, const QuadElem& delta) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const QuadElem& c);

  RingTag ring_;
  std::map<Monomial, QuadElem> terms_;
};

}  // namespace ellgal
