#include "ellgal/torsion_lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "ellgal/errors.hpp"

namespace ellgal {

int unit_order(LatticeClass lattice) {
  switch (lattice) {
    case LatticeClass::square: return 4;
    case LatticeClass::hexagonal: return 6;
    default: return 2;
  }
}

RingTag lattice_ring(LatticeClass lattice) {
  switch (lattice) {
    case LatticeClass::square: return RingTag::e4();
    case LatticeClass::hexagonal: return RingTag::e6();
    default: return RingTag::rationals();
  }
}

std::string lattice_name(LatticeClass lattice) {
  switch (lattice) {
    case LatticeClass::square: return "square";
    case LatticeClass::hexagonal: return "hex";
    default: return "generic";
  }
}

std::optional<LatticeClass> parse_lattice(std::string_view text) {
  if (text == "generic") return LatticeClass::generic;
  if (text == "square") return LatticeClass::square;
  if (text == "hex" || text == "hexagonal") return LatticeClass::hexagonal;
  return std::nullopt;
}

bool supports_rotation(LatticeClass lattice, int l) {
  if (l == 1 || l == 2) return true;
  if (l == 4) return lattice == LatticeClass::square;
  if (l == 3 || l == 6) return lattice == LatticeClass::hexagonal;
  return false;
}

IntMatrix2 unit_matrix(LatticeClass lattice, int l) {
  if (!supports_rotation(lattice, l)) {
    throw UnsupportedRotationError("the " + lattice_name(lattice) +
                                   " lattice has no rotation of order " + std::to_string(l));
  }
  switch (l) {
    case 1: return IntMatrix2::identity();
    case 2: return IntMatrix2::rows(-1, 0, 0, -1);
    case 4: return IntMatrix2::rows(0, -1, 1, 0);
    case 6: return IntMatrix2::rows(0, -1, 1, 1);
    default: {
      // e3 = e6^2 in the (1, e6) basis
      const IntMatrix2 b6 = IntMatrix2::rows(0, -1, 1, 1);
      return b6 * b6;
    }
  }
}

IntMatrix2 maximal_unit_matrix(LatticeClass lattice) {
  return unit_matrix(lattice, unit_order(lattice));
}

TorsionPoint::TorsionPoint(LatticeClass lattice, const Rational& u, const Rational& v)
    : lattice_(lattice), u_(frac_part(u)), v_(frac_part(v)) {}

TorsionPoint TorsionPoint::from_quad(LatticeClass lattice, const QuadElem& beta) {
  if (beta.is_rational()) return TorsionPoint(lattice, beta.a(), 0);
  const RingTag target = lattice_ring(lattice);
  if (!target.has_zeta() || !beta.ring().same_field(target)) {
    throw TagMismatchError(beta.ring().name() + " element cannot live on the " +
                           lattice_name(lattice) + " lattice");
  }
  const QuadElem b = beta.in_ring(target);
  return TorsionPoint(lattice, b.a(), b.b());
}

Integer TorsionPoint::order() const { return lcm(u_.get_den(), v_.get_den()); }

void TorsionPoint::require_same_lattice(const TorsionPoint& o) const {
  if (lattice_ != o.lattice_) {
    throw TagMismatchError("torsion points on different lattices: " + lattice_name(lattice_) +
                           " vs " + lattice_name(o.lattice_));
  }
}

TorsionPoint TorsionPoint::operator-() const { return TorsionPoint(lattice_, -u_, -v_); }

TorsionPoint& TorsionPoint::operator+=(const TorsionPoint& o) {
  require_same_lattice(o);
  u_ = frac_part(u_ + o.u_);
  v_ = frac_part(v_ + o.v_);
  return *this;
}

TorsionPoint& TorsionPoint::operator-=(const TorsionPoint& o) {
  require_same_lattice(o);
  u_ = frac_part(u_ - o.u_);
  v_ = frac_part(v_ - o.v_);
  return *this;
}

TorsionPoint TorsionPoint::times(const Integer& n) const {
  return TorsionPoint(lattice_, u_ * Rational(n), v_ * Rational(n));
}

TorsionPoint TorsionPoint::transformed(const IntMatrix2& m) const {
  return TorsionPoint(lattice_, Rational(m.p) * u_ + Rational(m.r) * v_,
                      Rational(m.q) * u_ + Rational(m.s) * v_);
}

std::string TorsionPoint::to_string() const {
  std::ostringstream os;
  os << "(" << u_ << ", " << v_ << ")";
  return os.str();
}

Integer torsion_order(const TorsionPoint& beta) { return beta.order(); }

TorsionPoint unit_action(std::int64_t j, const TorsionPoint& beta) {
  const int n = unit_order(beta.lattice());
  const std::int64_t e = mod_floor(j, n);
  return beta.transformed(mat_pow(maximal_unit_matrix(beta.lattice()), e));
}

std::pair<Integer, Integer> smith_form(const RelationMatrix& columns) {
  std::vector<Integer> r0, r1;
  r0.reserve(columns.size());
  r1.reserve(columns.size());
  for (const auto& c : columns) {
    r0.push_back(c[0]);
    r1.push_back(c[1]);
  }
  const std::size_t n = columns.size();
  if (n == 0) return {0, 0};

  for (;;) {
    // Move the entry of least nonzero absolute value to (0, 0).
    int best_row = -1;
    std::size_t best_col = 0;
    Integer best_abs;
    for (int row = 0; row < 2; ++row) {
      const auto& r = row == 0 ? r0 : r1;
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(r[c]) == 0) continue;
        const Integer a = abs(r[c]);
        if (best_row < 0 || a < best_abs) {
          best_row = row;
          best_col = c;
          best_abs = a;
        }
      }
    }
    if (best_row < 0) return {0, 0};
    if (best_row == 1) std::swap(r0, r1);
    std::swap(r0[0], r0[best_col]);
    std::swap(r1[0], r1[best_col]);

    bool clean = true;
    for (std::size_t c = 1; c < n; ++c) {
      if (sgn(r0[c]) == 0) continue;
      const Integer qt = r0[c] / r0[0];
      r0[c] -= qt * r0[0];
      r1[c] -= qt * r1[0];
      if (sgn(r0[c]) != 0) clean = false;
    }
    if (sgn(r1[0]) != 0) {
      const Integer qt = r1[0] / r0[0];
      for (std::size_t c = 0; c < n; ++c) r1[c] -= qt * r0[c];
      if (sgn(r1[0]) != 0) clean = false;
    }
    if (!clean) continue;

    const bool divides = std::all_of(r1.begin() + 1, r1.end(), [&](const Integer& x) {
      return x % r0[0] == 0;
    });
    if (!divides) {
      for (std::size_t c = 0; c < n; ++c) r0[c] += r1[c];
      continue;
    }

    Integer d2 = 0;
    for (std::size_t c = 1; c < n; ++c) d2 = gcd(d2, r1[c]);
    return {abs(r0[0]), d2};
  }
}

std::pair<Integer, Integer> torsion_invariant_factors(
    const std::vector<std::array<std::int64_t, 2>>& vectors, std::int64_t level) {
  RelationMatrix columns;
  columns.reserve(vectors.size() + 2);
  for (const auto& v : vectors) columns.push_back({Integer(v[0]), Integer(v[1])});
  columns.push_back({Integer(level), Integer(0)});
  columns.push_back({Integer(0), Integer(level)});
  const auto [a1, a2] = smith_form(columns);
  // The span is a1*Z + a2*Z in adapted coordinates and contains level*Z^2.
  return {Integer(level) / a2, Integer(level) / a1};
}

bool TorsionSubgroup::contains(const TorsionPoint& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

TorsionSubgroup subgroup_structure(const std::vector<TorsionPoint>& gens, std::size_t cap) {
  TorsionSubgroup out;
  out.generators = gens;
  if (!gens.empty()) out.lattice = gens.front().lattice();
  for (const auto& g : gens) {
    if (g.lattice() != out.lattice) {
      throw TagMismatchError("generators live on different lattices");
    }
  }

  Integer level = 1;
  for (const auto& g : gens) level = lcm(level, g.order());
  if (level > Integer(static_cast<unsigned long>(cap))) {
    throw CapExceededError("torsion subgroup exponent " + level.get_str() + " exceeds cap " +
                           std::to_string(cap));
  }
  const std::int64_t n = level.get_si();

  std::vector<std::array<std::int64_t, 2>> vecs;
  vecs.reserve(gens.size());
  for (const auto& g : gens) {
    const Rational a = g.u() * Rational(level);
    const Rational b = g.v() * Rational(level);
    vecs.push_back({a.get_num().get_si(), b.get_num().get_si()});
  }

  std::unordered_set<std::int64_t> seen{0};
  std::deque<std::array<std::int64_t, 2>> frontier{{0, 0}};
  std::vector<std::array<std::int64_t, 2>> found{{0, 0}};
  while (!frontier.empty()) {
    const auto cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : vecs) {
      const std::array<std::int64_t, 2> next{(cur[0] + g[0]) % n, (cur[1] + g[1]) % n};
      if (seen.insert(next[0] * n + next[1]).second) {
        if (seen.size() > cap) {
          throw CapExceededError("torsion closure exceeds cap " + std::to_string(cap));
        }
        frontier.push_back(next);
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  out.elements.reserve(found.size());
  for (const auto& e : found) {
    out.elements.emplace_back(out.lattice, make_rational(e[0], n), make_rational(e[1], n));
  }

  out.invariant_factors = torsion_invariant_factors(vecs, n);
  const Integer product = out.invariant_factors.first * out.invariant_factors.second;
  if (product != Integer(static_cast<unsigned long>(found.size()))) {
    throw Error("invariant factors disagree with the element count");
  }
  return out;
}

bool rationally_independent(const TorsionPoint& a, const TorsionPoint& b) {
  return sgn(a.u() * b.v() - a.v() * b.u()) != 0;
}

}  // namespace ellgal
