#pragma once

// Number-theoretic admissibility tests, the two decision procedures (subgroup
// of some Aut(E), Galois group at an outer Galois point) and explicit
// witnesses.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellgal/aut_group.hpp"
#include "ellgal/exact_arith.hpp"
#include "ellgal/group_label.hpp"
#include "ellgal/torsion_lattice.hpp"

namespace ellgal {

/// 1, 0, -1 for l = 3, 4, 6 (so that e_l^2 + eps*e_l + 1 = 0).
int rotation_epsilon(int l);

/// Smallest h in [0, k) with k | h^2 + eps*h + 1.
std::optional<std::int64_t> exists_h(std::int64_t k, int l);
/// Every h in [0, k) with k | h^2 + eps*h + 1.
std::vector<std::int64_t> admissible_h_values(std::int64_t k, int l);
/// Smallest admissible h with h != 1 mod k, i.e. one giving a non-abelian
/// semidirect product Z_k x| Z_l. None for k = 1.
std::optional<std::int64_t> nondegenerate_h(std::int64_t k, int l);

/// Coprime (a, b) with k = a^2 - eps*a*b + b^2, searched over
/// |a|, |b| <= ceil(sqrt(2k)), preferring a >= b >= 0.
std::optional<std::pair<std::int64_t, std::int64_t>> norm_form_rep(std::int64_t k, int l);

/// Every prime p | k is 3 or 1 mod 3 (l = 3, 6), resp. 2 or 1 mod 4 (l = 4).
bool prime_condition(std::int64_t k, int l);

/// Both gcd equalities tying the orders of beta, beta' to (m, mk).
/// Throws PreconditionError when gcd(a, b) != 1 or ps - qr != 1.
bool check_condition_e(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t q,
                       std::int64_t r, std::int64_t s, std::int64_t m, std::int64_t k, int l);

/// The explicit (a, b, d, p, q, r, s, lambda) data for a two-generator
/// torsion part, and the translations it defines.
struct ScaleData {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t d = 1;
  std::int64_t h = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;
  QuadElem lambda;
  TorsionPoint beta;
  TorsionPoint beta_prime;
  bool condition_e = false;
};

/// Builds the scale data for (m, k, l) with the given d (gcd(d, mk) = 1).
ScaleData lemma_scale_data(std::int64_t m, std::int64_t k, int l, std::int64_t d = 1);

struct Witness {
  LatticeClass lattice = LatticeClass::generic;
  std::vector<AffineAut> generators;
  std::optional<ScaleData> scale_data;
};

/// Throws NotRealizableError naming the failed condition.
Witness realize(const GroupLabel& label);

struct AdmissibilityReport {
  GroupLabel label;
  bool subgroup_realizable = false;
  bool galois_realizable = false;
  std::optional<std::int64_t> h;
  std::optional<std::pair<std::int64_t, std::int64_t>> norm_form_pair;
  std::string failure_reason;
};

AdmissibilityReport subgroup_admissible(const GroupLabel& label);
AdmissibilityReport galois_admissible(const GroupLabel& label);

/// The abelian labels that occur together with a non-trivial rotation part.
const std::vector<GroupLabel>& rotation_abelian_labels();

}  // namespace ellgal
