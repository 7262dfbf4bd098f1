#pragma once

// Torsion points of C/L for the three lattice classes L = Z + Z*zeta, written
// in coordinates (u, v) mod 1 with respect to the basis (1, zeta).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellgal/exact_arith.hpp"

namespace ellgal {

/// generic: zeta is a formal omega, units +-1.
/// square:  zeta = e4.
/// hexagonal: zeta = e6 (e3-based data is converted on entry).
enum class LatticeClass { generic, square, hexagonal };

int unit_order(LatticeClass lattice);
/// Ring carrying zeta; generic has no arithmetic beyond Z-combinations.
RingTag lattice_ring(LatticeClass lattice);
std::string lattice_name(LatticeClass lattice);
/// Accepts generic, square, hex and hexagonal.
std::optional<LatticeClass> parse_lattice(std::string_view text);

/// Whether multiplication by e_l preserves the lattice.
bool supports_rotation(LatticeClass lattice, int l);

/// Matrix of multiplication by e_l on coordinates w.r.t. (1, zeta):
/// new coordinates = B * (u, v)^T.
IntMatrix2 unit_matrix(LatticeClass lattice, int l);
/// Multiplication by the generating unit (e2, e4 or e6).
IntMatrix2 maximal_unit_matrix(LatticeClass lattice);

class TorsionPoint {
 public:
  explicit TorsionPoint(LatticeClass lattice = LatticeClass::generic) : lattice_(lattice) {}
  TorsionPoint(LatticeClass lattice, const Rational& u, const Rational& v);

  /// beta = a + b*zeta for a QuadElem over the lattice ring; e3 inputs on the
  /// hexagonal lattice are rewritten in the (1, e6) basis.
  static TorsionPoint from_quad(LatticeClass lattice, const QuadElem& beta);

  LatticeClass lattice() const noexcept { return lattice_; }
  const Rational& u() const noexcept { return u_; }
  const Rational& v() const noexcept { return v_; }

  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  Integer order() const;

  TorsionPoint operator-() const;
  TorsionPoint& operator+=(const TorsionPoint& o);
  TorsionPoint& operator-=(const TorsionPoint& o);
  friend TorsionPoint operator+(TorsionPoint a, const TorsionPoint& b) { return a += b; }
  friend TorsionPoint operator-(TorsionPoint a, const TorsionPoint& b) { return a -= b; }
  TorsionPoint times(const Integer& n) const;
  /// Apply an integer matrix to the coordinate column and reduce mod 1.
  TorsionPoint transformed(const IntMatrix2& m) const;

  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
    return a.lattice_ == b.lattice_ && a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
    if (a.u_ != b.u_) return a.u_ < b.u_;
    return a.v_ < b.v_;
  }

  std::string to_string() const;

 private:
  void require_same_lattice(const TorsionPoint& o) const;

  LatticeClass lattice_;
  Rational u_ = 0;
  Rational v_ = 0;
};

/// Smallest n >= 1 with n*beta in L.
Integer torsion_order(const TorsionPoint& beta);

/// e^j * beta mod L, where e is the generating unit of the lattice.
TorsionPoint unit_action(std::int64_t j, const TorsionPoint& beta);

/// A 2 x n integer matrix given by its columns.
using RelationMatrix = std::vector<std::array<Integer, 2>>;

/// Elementary divisors (d1, d2), d1 | d2, of a 2 x n integer matrix.
/// A rank-1 matrix gives (d1, 0) and the zero matrix (0, 0).
std::pair<Integer, Integer> smith_form(const RelationMatrix& columns);

struct TorsionSubgroup {
  LatticeClass lattice = LatticeClass::generic;
  std::vector<TorsionPoint> elements;    // sorted
  std::vector<TorsionPoint> generators;
  std::pair<Integer, Integer> invariant_factors{1, 1};

  std::size_t order() const { return elements.size(); }
  bool is_cyclic() const { return invariant_factors.first == 1; }
  bool contains(const TorsionPoint& p) const;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Closure of gens under addition plus Smith-form invariant factors.
/// Throws CapExceededError beyond cap elements.
TorsionSubgroup subgroup_structure(const std::vector<TorsionPoint>& gens,
                                   std::size_t cap = kDefaultClosureCap);

/// Invariant factors of the subgroup of (Q/Z)^2 generated by integer vectors
/// mod `level` (points (a/level, b/level)).
std::pair<Integer, Integer> torsion_invariant_factors(
    const std::vector<std::array<std::int64_t, 2>>& vectors, std::int64_t level);

/// Coordinates of a and b are linearly independent over Q.
bool rationally_independent(const TorsionPoint& a, const TorsionPoint& b);

}  // namespace ellgal
