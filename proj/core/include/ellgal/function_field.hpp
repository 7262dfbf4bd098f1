#pragma once

// The function field K(x, y), y^2 = f(x), of an elliptic curve over
// K = Q or Q(zeta), curve self-maps given by pullbacks, the translation maps
// of the group law, and the Galois-cover certificate for a plane model
// F(s, t) = 0.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellgal/abstract_group.hpp"
#include "ellgal/exact_arith.hpp"
#include "ellgal/group_label.hpp"
#include "ellgal/polynomial.hpp"

namespace ellgal {

/// y^2 = f(x) with f a monic cubic without repeated roots.
class Curve {
 public:
  /// Throws PreconditionError for a non-monic or non-cubic f and
  /// DegeneracyError for a singular one.
  explicit Curve(Poly f);
  static Curve weierstrass(RingTag ring, const Rational& p, const Rational& q);
  /// x(x - 1)(x - b), b not in {0, 1}.
  static Curve legendre(RingTag ring, const Rational& b);

  RingTag ring() const noexcept { return f_.ring(); }
  const Poly& f() const noexcept { return f_; }
  /// Coefficient of x^2.
  QuadElem a2() const { return f_.coeff(2); }
  bool contains(const QuadElem& x0, const QuadElem& y0) const;

  std::string to_string() const { return "y^2 = " + f_.to_string(); }

 private:
  Poly f_;
};

using CurvePtr = std::shared_ptr<const Curve>;

/// r(x) + s(x) * y modulo y^2 - f(x).
class FFElem {
 public:
  FFElem(CurvePtr curve, RatFunc r, RatFunc s);
  static FFElem constant(CurvePtr curve, const QuadElem& c);
  static FFElem x(CurvePtr curve);
  static FFElem y(CurvePtr curve);

  const CurvePtr& curve() const noexcept { return curve_; }
  const RatFunc& r() const noexcept { return r_; }
  const RatFunc& s() const noexcept { return s_; }
  bool is_zero() const noexcept { return r_.is_zero() && s_.is_zero(); }
  bool is_constant() const noexcept { return s_.is_zero() && r_.is_constant(); }

  FFElem operator-() const;
  FFElem& operator+=(const FFElem& o);
  FFElem& operator-=(const FFElem& o);
  FFElem& operator*=(const FFElem& o);
  FFElem& operator/=(const FFElem& o);
  friend FFElem operator+(FFElem a, const FFElem& b) { return a += b; }
  friend FFElem operator-(FFElem a, const FFElem& b) { return a -= b; }
  friend FFElem operator*(FFElem a, const FFElem& b) { return a *= b; }
  friend FFElem operator/(FFElem a, const FFElem& b) { return a /= b; }
  /// (r - s*y) / (r^2 - s^2 f); throws DivisionByZeroError on zero.
  FFElem inverse() const;
  FFElem pow(std::int64_t n) const;

  /// Norm to K(x): r^2 - s^2 f.
  RatFunc norm() const;

  friend bool operator==(const FFElem& a, const FFElem& b) { return a.r_ == b.r_ && a.s_ == b.s_; }

  std::string to_string() const;

 private:
  void require_same_curve(const FFElem& o) const;

  CurvePtr curve_;
  RatFunc r_;
  RatFunc s_;
};

/// A self-map of the curve given by the pullbacks of x and y.
struct AutMap {
  FFElem xi;
  FFElem eta;

  static AutMap identity(const CurvePtr& curve);
  /// eta^2 = f(xi).
  bool lands_on_curve() const;
  bool is_identity() const;

  friend bool operator==(const AutMap& a, const AutMap& b) { return a.xi == b.xi && a.eta == b.eta; }
  std::string to_string() const { return "(" + xi.to_string() + ", " + eta.to_string() + ")"; }
};

/// e(xi, eta): substitute the map into a function.
FFElem pullback(const FFElem& e, const AutMap& m);
/// The map whose pullback is "first m1, then m2": x -> m1(x)(m2).
AutMap compose(const AutMap& m1, const AutMap& m2);

inline constexpr int kDefaultAutOrderCap = 24;

/// Least n >= 1 with m^n = id. Throws CapExceededError past cap.
int aut_order(const AutMap& m, int cap = kDefaultAutOrderCap);

/// Affine point or the point at infinity (nullopt).
using CurvePoint = std::optional<std::pair<QuadElem, QuadElem>>;

/// Chord-tangent addition with the zero at infinity.
CurvePoint curve_add(const Curve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint curve_neg(const CurvePoint& p);
/// Order of p, or nullopt past cap.
std::optional<int> point_order(const Curve& curve, const CurvePoint& p, int cap = 64);

/// Pullback of translation by p. Throws NotOnCurveError when p is not on the
/// curve; infinity gives the identity.
AutMap translation_map(const CurvePtr& curve, const CurvePoint& p);

bool is_invariant(const FFElem& s, const AutMap& m);

struct DegreeOptions {
  std::uint64_t seed = 0x5eed;
  int samples = 3;
};

/// Degree of s: K(x, y) -> K(s) via the x-degree of the norm of s - c for
/// random rational c, agreeing across all samples. Throws PreconditionError
/// for constant s and DegeneracyError when the samples disagree.
int map_degree(const FFElem& s, const DegreeOptions& options = DegreeOptions{});

/// F(s, t) with s, t substituted.
FFElem evaluate(const BiPoly& F, const FFElem& s, const FFElem& t);
bool verify_relation(const BiPoly& F, const FFElem& s, const FFElem& t);

struct CoverSpec {
  CurvePtr curve;
  std::vector<AutMap> generators;
  FFElem s;
  FFElem t;
  BiPoly F;
  GroupLabel expected_group;
};

struct ClauseResult {
  int clause = 0;
  bool passed = false;
  std::string detail;
};

struct CoverCertificate {
  bool passed = false;
  std::size_t group_order = 0;
  std::optional<int> degree;
  std::vector<ClauseResult> clauses;  // clauses 1..6 in order

  const ClauseResult& clause(int i) const { return clauses.at(static_cast<std::size_t>(i - 1)); }
};

/// The six clauses: generators are automorphisms of finite order; their
/// closure matches the expected group; s is invariant; deg s = |G|; F(s, t) = 0
/// with deg_t F = |G|; the |G| conjugates of t are distinct.
CoverCertificate verify_galois_cover(const CoverSpec& spec, const DegreeOptions& options = DegreeOptions{},
                                     int order_cap = kDefaultAutOrderCap);

/// Closure of the generators under composition, identity first. Throws
/// CapExceededError past cap elements.
std::vector<AutMap> map_closure(const CurvePtr& curve, const std::vector<AutMap>& generators,
                                std::size_t cap = 64);
FiniteGroup cayley_group(const std::vector<AutMap>& elements);

/// First non-identity candidate leaving s fixed.
std::optional<AutMap> find_stabilizing_automorphism(const FFElem& s, const std::vector<AutMap>& candidates);

/// Maps (x, y) -> (u x, +-y) with u ranging over the roots of unity of K that
/// preserve the curve, each composed with translation by the given points.
std::vector<AutMap> rotation_translation_candidates(const CurvePtr& curve,
                                                    const std::vector<CurvePoint>& points);

}  // namespace ellgal
