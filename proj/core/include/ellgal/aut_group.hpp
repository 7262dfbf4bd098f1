#pragma once

// Finite subgroups of Aut(E) as sets of affine maps z -> alpha*z + beta with
// alpha a unit of the lattice and beta torsion.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellgal/abstract_group.hpp"
#include "ellgal/exact_arith.hpp"
#include "ellgal/group_label.hpp"
#include "ellgal/torsion_lattice.hpp"

namespace ellgal {

/// z -> e^j * z + beta, e the generating unit of the lattice.
struct AffineAut {
  LatticeClass lattice = LatticeClass::generic;
  int j = 0;
  TorsionPoint beta;

  static AffineAut identity(LatticeClass lattice) { return {lattice, 0, TorsionPoint(lattice)}; }
  /// Rotation by e^j about the origin.
  static AffineAut rotation(LatticeClass lattice, int j);
  /// Rotation by e_l (l in {2, 3, 4, 6}) about the origin.
  static AffineAut rotation_of_order(LatticeClass lattice, int l);
  static AffineAut translation(const TorsionPoint& beta) { return {beta.lattice(), 0, beta}; }

  bool is_translation() const { return j == 0; }

  friend bool operator==(const AffineAut& a, const AffineAut& b) {
    return a.lattice == b.lattice && a.j == b.j && a.beta == b.beta;
  }
  friend bool operator<(const AffineAut& a, const AffineAut& b) {
    if (a.j != b.j) return a.j < b.j;
    return a.beta < b.beta;
  }

  std::string to_string() const;
};

/// (j1, b1) o (j2, b2) = (j1 + j2, b1 + e^j1 * b2).
AffineAut compose(const AffineAut& a, const AffineAut& b);
AffineAut inverse(const AffineAut& a);

struct FiniteSubgroup {
  LatticeClass lattice = LatticeClass::generic;
  std::vector<AffineAut> elements;  // sorted
  std::vector<AffineAut> generators;
  TorsionSubgroup torsion_part;
  int unit_part_order = 1;

  std::size_t order() const { return elements.size(); }
  bool contains(const AffineAut& g) const;
  bool is_abelian() const;
};

/// Throws CapExceededError beyond cap elements.
FiniteSubgroup closure(const std::vector<AffineAut>& gens,
                       std::size_t cap = kDefaultClosureCap);

/// (G_T, |G_0|).
std::pair<TorsionSubgroup, int> decompose(const FiniteSubgroup& group);

/// Canonical generator pair of a two-generator torsion part: beta' of maximal
/// order, beta of least order completing a generating pair, lexicographic
/// tie-breaks.
std::pair<TorsionPoint, TorsionPoint> generator_pair(const TorsionSubgroup& torsion);

/// Integer matrix A with e_l (beta, beta') = (beta, beta') A, e_l generating
/// G_0. Row one is reduced mod ord(beta), row two mod ord(beta'). Throws
/// UndefinedActionError without a rotation part or a rank-2 translation part.
IntMatrix2 action_matrix(const FiniteSubgroup& group);
IntMatrix2 action_matrix(const FiniteSubgroup& group, const TorsionPoint& beta,
                         const TorsionPoint& beta_prime);

/// M^-1 B_l M with B_l = (0 -1; 1 -eps). Cross-checked against
/// closed_form_action.
IntMatrix2 action_matrix_from_base_change(const IntMatrix2& m, int l);
/// Entrywise polynomial formula for M^-1 B_l M, carrying the sign det(M).
IntMatrix2 closed_form_action(const IntMatrix2& m, int l);

/// Row one agrees mod m1, row two mod m2.
bool congruent_mod_orders(const IntMatrix2& a, const IntMatrix2& b, const Integer& m1,
                          const Integer& m2);

/// Throws ClassificationError when no taxonomy shape fits.
GroupLabel classify(const FiniteSubgroup& group);

FiniteGroup to_finite_group(const FiniteSubgroup& group);

inline constexpr std::size_t kDefaultIsoBound = 2000;

/// Brute-force isomorphism against the label's canonical presentation. For
/// exceptional labels without h every admissible h is tried. Throws
/// CapExceededError when |G| > bound.
bool iso_check(const FiniteSubgroup& group, const GroupLabel& label,
               std::size_t bound = kDefaultIsoBound);

namespace detail {

/// Integer encoding of affine maps whose translations lie in (1/level)Z^2.
class CompactFrame {
 public:
  struct Elem {
    int j = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
  };

  CompactFrame(LatticeClass lattice, std::int64_t level);

  LatticeClass lattice() const noexcept { return lattice_; }
  std::int64_t level() const noexcept { return level_; }
  int units() const noexcept { return units_; }
  std::int64_t ambient_size() const { return static_cast<std::int64_t>(units_) * level_ * level_; }

  Elem mul(const Elem& x, const Elem& y) const;
  Elem inv(const Elem& x) const;
  std::int64_t key(const Elem& x) const { return (x.j * level_ + x.a) * level_ + x.b; }
  Elem from_key(std::int64_t key) const;

  Elem encode(const AffineAut& g) const;
  AffineAut decode(const Elem& x) const;

 private:
  LatticeClass lattice_;
  std::int64_t level_;
  int units_;
  std::vector<std::array<std::int64_t, 4>> powers_;
};

/// Builds the group record from a sorted list of element keys of `frame`.
FiniteSubgroup subgroup_from_keys(const CompactFrame& frame, const std::vector<std::int64_t>& keys,
                                  std::vector<AffineAut> generators);

}  // namespace detail

}  // namespace ellgal
