#pragma once

// Finite groups given by a Cayley table, canonical presentations of the
// labelled groups, and a brute-force isomorphism test. This is the oracle side
// of classification: it never looks at lattices or torsion points.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ellgal/group_label.hpp"

namespace ellgal {

class FiniteGroup {
 public:
  using Index = std::uint32_t;

  /// table[a * n + b] = a*b; element 0 must be the identity.
  FiniteGroup(std::size_t n, std::vector<Index> table);

  /// Builds the table from n elements indexed 0..n-1 with `mul` returning the
  /// index of the product. Index 0 must be the identity.
  static FiniteGroup from_multiplication(std::size_t n,
                                         const std::function<Index(Index, Index)>& mul);

  std::size_t size() const noexcept { return n_; }
  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const { return inverse_[a]; }
  std::size_t element_order(Index a) const { return orders_[a]; }

  bool is_abelian() const;
  std::size_t center_size() const;
  std::size_t centralizer_size(Index a) const;
  /// Order of the subgroup generated by all commutators.
  std::size_t derived_subgroup_size() const;
  /// element order -> number of elements of that order
  std::map<std::size_t, std::size_t> order_profile() const;
  /// Indicator vector of the subgroup generated by gens.
  std::vector<bool> generated(const std::vector<Index>& gens) const;

 private:
  std::size_t n_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<std::size_t> orders_;
};

/// Canonical presentation of a label. Exceptional labels need the action
/// exponent h (k | h^2 + eps*h + 1); the label's own h is used when present.
FiniteGroup canonical_group(const GroupLabel& label, std::optional<std::int64_t> h = std::nullopt);

/// Invariant comparison followed by a generator-image search.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace ellgal
