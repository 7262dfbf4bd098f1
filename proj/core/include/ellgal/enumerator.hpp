#pragma once

// Exhaustive subgroup enumeration of E[N] x| mu_n, used as an independent
// check of the classification theorem.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellgal/aut_group.hpp"
#include "ellgal/group_label.hpp"
#include "ellgal/torsion_lattice.hpp"

namespace ellgal {

inline constexpr std::size_t kDefaultAmbientCap = 2000;

struct EnumerationResult {
  LatticeClass lattice = LatticeClass::generic;
  std::int64_t level = 1;
  std::vector<FiniteSubgroup> subgroups;
  /// Parallel to subgroups; empty when classification threw.
  std::vector<std::optional<GroupLabel>> labels;
  /// Parallel to subgroups; the exception text when classification threw.
  std::vector<std::string> classification_errors;

  std::size_t size() const { return subgroups.size(); }
};

/// Every subgroup of E[level] x| mu_units, by iterated one-element extension
/// to a fixpoint. Throws CapExceededError when units * level^2 > cap.
EnumerationResult enumerate_subgroups(LatticeClass lattice, std::int64_t level,
                                      std::size_t cap = kDefaultAmbientCap);

struct CensusOptions {
  /// Also compare every subgroup with its label's canonical group.
  bool check_isomorphism = true;
  std::size_t iso_bound = kDefaultIsoBound;
};

struct CensusReport {
  bool passed = true;
  std::size_t subgroup_count = 0;
  std::size_t classification_failures = 0;
  std::map<std::string, std::size_t> label_counts;
  /// One line per violation, naming a counterexample subgroup.
  std::vector<std::string> violations;

  std::size_t count(const GroupLabel& label) const;
};

CensusReport census_check(const EnumerationResult& result,
                          const CensusOptions& options = CensusOptions{});

/// One line per subgroup; see write_snapshot.
struct SnapshotRecord {
  LatticeClass lattice = LatticeClass::generic;
  std::int64_t level = 1;
  std::size_t order = 1;
  std::string label;
  std::vector<AffineAut> generators;

  friend bool operator==(const SnapshotRecord& a, const SnapshotRecord& b) {
    return a.lattice == b.lattice && a.level == b.level && a.order == b.order &&
           a.label == b.label && a.generators == b.generators;
  }
};

inline constexpr const char* kSnapshotHeader = "ellgal-census v1";

/// Header line, then tab-separated lattice, level, order, label and the
/// generators as `j:u:v` joined by spaces.
void write_snapshot(std::ostream& out, const EnumerationResult& result);
/// Throws ParseError on malformed input or an unknown format version.
std::vector<SnapshotRecord> read_snapshot(std::istream& in);

}  // namespace ellgal
