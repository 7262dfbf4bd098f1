#pragma once

// Names for the finite groups that occur as subgroups of Aut(E).
//
// Text grammar (whitespace-insensitive):
//   Z<m>, Z<m>xZ<n>[x...], Z<m>^<r>   abelian
//   D<n>                              dihedral of order 2n
//   BD(<m>,<n>)                       bidihedral
//   E(<k>,<l>), E(<m>,<k>,<l>)        exceptional elliptic groups

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ellgal {

/// Invariant factors d1 | d2 | ... (all > 1) of a product of cyclic groups.
std::vector<std::int64_t> invariant_factors_of(const std::vector<std::int64_t>& cyclic_orders);

enum class LabelKind { abelian, dihedral, bidihedral, exc1, exc2 };

class GroupLabel {
 public:
  struct Abelian {
    std::vector<std::int64_t> factors;  // invariant factors, trivial group = {}
    friend bool operator==(const Abelian&, const Abelian&) = default;
  };
  struct Dihedral {
    std::int64_t n = 3;
    friend bool operator==(const Dihedral&, const Dihedral&) = default;
  };
  struct Bidihedral {
    std::int64_t m = 2;
    std::int64_t n = 4;
    friend bool operator==(const Bidihedral&, const Bidihedral&) = default;
  };
  struct Exc1 {
    std::int64_t k = 1;
    int l = 3;
    friend bool operator==(const Exc1&, const Exc1&) = default;
  };
  struct Exc2 {
    std::int64_t m = 2;
    std::int64_t k = 1;
    int l = 3;
    friend bool operator==(const Exc2&, const Exc2&) = default;
  };

  GroupLabel() : value_(Abelian{}) {}

  /// Any list of cyclic orders; normalized to invariant factors.
  static GroupLabel abelian(const std::vector<std::int64_t>& cyclic_orders);
  static GroupLabel cyclic(std::int64_t n) { return abelian({n}); }
  /// D_n for n >= 3. Smaller n name abelian groups and are rejected.
  static GroupLabel dihedral(std::int64_t n);
  /// Canonicalized to invariant factors of Z_m + Z_n; a cyclic translation
  /// part turns the label into a dihedral one.
  static GroupLabel bidihedral(std::int64_t m, std::int64_t n);
  static GroupLabel exc1(std::int64_t k, int l);
  /// m = 1 collapses to exc1(k, l).
  static GroupLabel exc2(std::int64_t m, std::int64_t k, int l);

  LabelKind kind() const;
  bool is_abelian() const { return kind() == LabelKind::abelian; }
  std::int64_t order() const;

  const Abelian* as_abelian() const { return std::get_if<Abelian>(&value_); }
  const Dihedral* as_dihedral() const { return std::get_if<Dihedral>(&value_); }
  const Bidihedral* as_bidihedral() const { return std::get_if<Bidihedral>(&value_); }
  const Exc1* as_exc1() const { return std::get_if<Exc1>(&value_); }
  const Exc2* as_exc2() const { return std::get_if<Exc2>(&value_); }

  /// Action exponent (e_l * beta = h * beta) when known; not part of equality.
  const std::optional<std::int64_t>& h() const noexcept { return h_; }
  GroupLabel with_h(std::int64_t h) const;

  std::string to_string() const;
  /// Constructor-style spelling, e.g. Abelian(2,4) or Exc2(5,13,4).
  std::string describe() const;

  friend bool operator==(const GroupLabel& a, const GroupLabel& b) { return a.value_ == b.value_; }

 private:
  using Value = std::variant<Abelian, Dihedral, Bidihedral, Exc1, Exc2>;
  explicit GroupLabel(Value v) : value_(std::move(v)) {}

  Value value_;
  std::optional<std::int64_t> h_;
};

/// Throws ParseError carrying the offending position.
GroupLabel parse_group_label(std::string_view text);

}  // namespace ellgal
