#pragma once

// The table of plane models of Galois covers: an embedded default copy plus a
// parser for the same line-oriented format read from files.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellgal/exact_arith.hpp"
#include "ellgal/expression.hpp"
#include "ellgal/function_field.hpp"
#include "ellgal/group_label.hpp"

namespace ellgal {

struct TranslationCheck {
  std::string px, py;    // the point added
  std::string xi, eta;   // expected pullbacks of x and y
};

struct RegistryEntry {
  int id = 0;
  std::string field = "Q";
  std::string params;  // parameter letters in specialization order
  std::vector<std::vector<Rational>> specializations;
  std::string curve;
  std::vector<std::pair<std::string, std::string>> generators;
  std::string s, t, F;
  GroupLabel group;
  int degree = 0;
  std::vector<TranslationCheck> translations;

  RingTag ring() const;
  /// One parameter set per specialization, or a single empty set.
  std::vector<Parameters> parameter_sets() const;
};

/// Throws ParseError with the line number as position.
std::vector<RegistryEntry> parse_registry(std::string_view text);
/// The built-in table; parsed once.
const std::vector<RegistryEntry>& paper_registry();
const RegistryEntry* find_registry_entry(int id);

/// "Q", "e3", "e4" or "e6".
RingTag field_from_tag(std::string_view tag);

CurvePtr build_curve(const RegistryEntry& entry, const Parameters& params);
AutMap build_map(const CurvePtr& curve, std::string_view xi, std::string_view eta, const Parameters& params);
CoverSpec build_cover_spec(const RegistryEntry& entry, const Parameters& params);

struct TranslationOutcome {
  AutMap computed;
  AutMap expected;
  bool matches = false;
};

TranslationOutcome check_translation(const RegistryEntry& entry, const TranslationCheck& check,
                                     const Parameters& params);

}  // namespace ellgal
