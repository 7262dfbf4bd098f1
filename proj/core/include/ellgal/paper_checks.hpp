#pragma once

// Reproductions of the worked examples: the action matrix example on Z[i],
// the two groups of order 1300 m^2, and the registry of Galois covers.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellgal/function_field.hpp"
#include "ellgal/registry.hpp"

namespace ellgal {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> failures;

  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  /// Records a failure unless ok.
  void require(bool ok, const std::string& what);
  std::optional<std::string> find(const std::string& key) const;
};

/// beta = (2+i)/5, beta' = (3+i)/10 on Z[i].
CheckResult check_action_example();
/// The two constructions with |G| = 1300 m^2.
CheckResult check_order_1300(std::int64_t m);
/// All parameter sets, certificates and translation closed forms of an entry.
CheckResult verify_registry_entry(const RegistryEntry& entry, const DegreeOptions& options = DegreeOptions{});

struct ExtraPointReport {
  std::size_t candidates = 0;
  std::optional<AutMap> automorphism;
  std::optional<int> order;
};

/// Searches rotations composed with translations by the Q(e3)-points of
/// y^2 = x^3 + 1 for a map fixing (y - sqrt(-3))/x.
ExtraPointReport search_extra_galois_point();

/// Every check (or one registry example by id). Failures do not stop the run.
std::vector<CheckResult> verify_paper(std::optional<int> example = std::nullopt,
                                      const DegreeOptions& options = DegreeOptions{});

}  // namespace ellgal
