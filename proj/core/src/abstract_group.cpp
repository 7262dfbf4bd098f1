#include "ellgal/abstract_group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <tuple>

#include "ellgal/errors.hpp"
#include "ellgal/realizability.hpp"

namespace ellgal {

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Index> table)
    : n_(n), table_(std::move(table)), inverse_(n), orders_(n) {
  if (n_ == 0 || table_.size() != n_ * n_) throw PreconditionError("malformed Cayley table");
  for (Index a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw PreconditionError("element 0 is not the identity");
    for (Index b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    std::size_t k = 1;
    Index x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
      if (k > n_) throw PreconditionError("table is not a group");
    }
    orders_[a] = k;
  }
}

FiniteGroup FiniteGroup::from_multiplication(std::size_t n,
                                             const std::function<Index(Index, Index)>& mul) {
  std::vector<Index> table(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  }
  return FiniteGroup(n, std::move(table));
}

bool FiniteGroup::is_abelian() const {
  for (Index a = 0; a < n_; ++a) {
    for (Index b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::centralizer_size(Index a) const {
  std::size_t c = 0;
  for (Index b = 0; b < n_; ++b) c += mul(a, b) == mul(b, a) ? 1 : 0;
  return c;
}

std::size_t FiniteGroup::center_size() const {
  std::size_t c = 0;
  for (Index a = 0; a < n_; ++a) c += centralizer_size(a) == n_ ? 1 : 0;
  return c;
}

std::vector<bool> FiniteGroup::generated(const std::vector<Index>& gens) const {
  std::vector<bool> in(n_, false);
  in[0] = true;
  std::deque<Index> frontier{0};
  while (!frontier.empty()) {
    const Index g = frontier.front();
    frontier.pop_front();
    for (Index s : gens) {
      const Index x = mul(g, s);
      if (!in[x]) {
        in[x] = true;
        frontier.push_back(x);
      }
    }
  }
  return in;
}

std::size_t FiniteGroup::derived_subgroup_size() const {
  std::vector<bool> is_comm(n_, false);
  std::vector<Index> comms;
  for (Index a = 0; a < n_; ++a) {
    for (Index b = 0; b < n_; ++b) {
      const Index c = mul(mul(inv(a), inv(b)), mul(a, b));
      if (!is_comm[c]) {
        is_comm[c] = true;
        comms.push_back(c);
      }
    }
  }
  const auto in = generated(comms);
  return static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
}

std::map<std::size_t, std::size_t> FiniteGroup::order_profile() const {
  std::map<std::size_t, std::size_t> profile;
  for (Index a = 0; a < n_; ++a) ++profile[orders_[a]];
  return profile;
}

namespace {

using Index = FiniteGroup::Index;

FiniteGroup abelian_group(const std::vector<std::int64_t>& factors) {
  std::size_t n = 1;
  for (auto d : factors) n *= static_cast<std::size_t>(d);
  const auto decode = [&](Index x) {
    std::vector<std::int64_t> digits(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      digits[i] = x % factors[i];
      x = static_cast<Index>(x / factors[i]);
    }
    return digits;
  };
  return FiniteGroup::from_multiplication(n, [&](Index a, Index b) {
    const auto da = decode(a);
    const auto db = decode(b);
    Index out = 0;
    Index radix = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out += static_cast<Index>((da[i] + db[i]) % factors[i]) * radix;
      radix *= static_cast<Index>(factors[i]);
    }
    return out;
  });
}

// (Z_m + Z_n) x| Z_2 with the involution acting by inversion; m = 1 gives D_n.
FiniteGroup inversion_extension(std::int64_t m, std::int64_t n) {
  const std::int64_t half = m * n;
  const auto decode = [&](Index x) {
    return std::array<std::int64_t, 3>{x % m, (x / m) % n, x / half};
  };
  return FiniteGroup::from_multiplication(static_cast<std::size_t>(2 * half),
                                          [&](Index a, Index b) {
    const auto [x1, y1, c1] = decode(a);
    const auto [x2, y2, c2] = decode(b);
    const std::int64_t sign = c1 == 0 ? 1 : -1;
    const std::int64_t x = mod_floor(x1 + sign * x2, m);
    const std::int64_t y = mod_floor(y1 + sign * y2, n);
    return static_cast<Index>(x + m * y + half * ((c1 + c2) % 2));
  });
}

// Z[zeta] / (m * P) with P = Z*k + Z*(zeta - h), extended by multiplication
// by zeta = e_l. Coordinates are taken in the basis (1, e_l).
FiniteGroup exceptional_group(std::int64_t m, std::int64_t k, int l, std::int64_t h) {
  const int eps = rotation_epsilon(l);
  if (((h * h + eps * h + 1) % k + k) % k != 0) {
    throw PreconditionError("h = " + std::to_string(h) + " does not satisfy k | h^2 + eps*h + 1");
  }
  const std::int64_t mk = m * k;
  const std::int64_t module_size = m * m * k;
  const auto reduce = [&](std::int64_t x, std::int64_t y) {
    const std::int64_t yr = mod_floor(y, m);
    const std::int64_t t = (y - yr) / m;
    return std::array<std::int64_t, 2>{mod_floor(x + t * m * h, mk), yr};
  };
  // powers of (0 -1; 1 -eps)
  std::vector<std::array<std::int64_t, 4>> powers{{1, 0, 0, 1}};
  for (int c = 1; c < l; ++c) {
    const auto& p = powers.back();
    // B * P with B = (0 -1; 1 -eps), entries (p r; q s)
    powers.push_back({-p[2], -p[3], p[0] - eps * p[2], p[1] - eps * p[3]});
  }
  const auto decode = [&](Index a) {
    const std::int64_t c = a / module_size;
    const std::int64_t rest = a % module_size;
    return std::array<std::int64_t, 3>{rest % mk, rest / mk, c};
  };
  return FiniteGroup::from_multiplication(static_cast<std::size_t>(module_size * l),
                                          [&](Index a, Index b) {
    const auto [x1, y1, c1] = decode(a);
    const auto [x2, y2, c2] = decode(b);
    const auto& B = powers[static_cast<std::size_t>(c1)];
    const auto v = reduce(x1 + B[0] * x2 + B[1] * y2, y1 + B[2] * x2 + B[3] * y2);
    return static_cast<Index>(v[0] + mk * v[1] + module_size * ((c1 + c2) % l));
  });
}

}  // namespace

FiniteGroup canonical_group(const GroupLabel& label, std::optional<std::int64_t> h) {
  if (const auto* a = label.as_abelian()) return abelian_group(a->factors);
  if (const auto* d = label.as_dihedral()) return inversion_extension(1, d->n);
  if (const auto* b = label.as_bidihedral()) return inversion_extension(b->m, b->n);

  std::int64_t m = 1, k = 1;
  int l = 3;
  if (const auto* e = label.as_exc1()) {
    k = e->k;
    l = e->l;
  } else {
    const auto& e2 = *label.as_exc2();
    m = e2.m;
    k = e2.k;
    l = e2.l;
  }
  if (!h) h = label.h();
  if (!h) h = m == 1 ? nondegenerate_h(k, l) : exists_h(k, l);
  if (!h) throw PreconditionError("no action exponent exists for " + label.to_string());
  return exceptional_group(m, k, l, *h);
}

namespace {

struct Signature {
  std::size_t order;
  std::size_t centralizer;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& a, const FiniteGroup& b)
      : a_(a), b_(b), phi_(a.size()), used_(b.size()) {
    for (Index x = 0; x < a.size(); ++x) sig_a_.push_back({a.element_order(x), a.centralizer_size(x)});
    for (Index y = 0; y < b.size(); ++y) sig_b_.push_back({b.element_order(y), b.centralizer_size(y)});
  }

  bool run() {
    choose_generators();
    for (const Index g : gens_) {
      std::vector<Index> cands;
      for (Index y = 0; y < b_.size(); ++y) {
        if (sig_b_[y] == sig_a_[g]) cands.push_back(y);
      }
      if (cands.empty()) return false;
      candidates_.push_back(std::move(cands));
    }
    images_.assign(gens_.size(), 0);
    return assign(0);
  }

 private:
  void choose_generators() {
    std::vector<bool> in = a_.generated({});
    std::size_t covered = 1;
    while (covered < a_.size()) {
      Index best = 0;
      std::size_t best_cover = 0;
      std::size_t best_cands = std::numeric_limits<std::size_t>::max();
      std::vector<Signature> tried;
      for (Index x = 1; x < a_.size(); ++x) {
        if (in[x]) continue;
        if (std::find(tried.begin(), tried.end(), sig_a_[x]) != tried.end()) continue;
        tried.push_back(sig_a_[x]);
        auto trial = gens_;
        trial.push_back(x);
        const auto cover = a_.generated(trial);
        const auto size = static_cast<std::size_t>(std::count(cover.begin(), cover.end(), true));
        const auto cands = static_cast<std::size_t>(
            std::count(sig_b_.begin(), sig_b_.end(), sig_a_[x]));
        if (size > best_cover || (size == best_cover && cands < best_cands)) {
          best = x;
          best_cover = size;
          best_cands = cands;
        }
      }
      gens_.push_back(best);
      in = a_.generated(gens_);
      covered = best_cover;
    }
  }

  bool assign(std::size_t i) {
    if (i == gens_.size()) return true;
    for (const Index y : candidates_[i]) {
      images_[i] = y;
      if (consistent(i + 1) && assign(i + 1)) return true;
    }
    return false;
  }

  // phi defined on <gens_[0..count)> by the chosen images is a well-defined
  // injective homomorphism.
  bool consistent(std::size_t count) {
    constexpr Index kNone = std::numeric_limits<Index>::max();
    std::fill(phi_.begin(), phi_.end(), kNone);
    std::fill(used_.begin(), used_.end(), false);
    phi_[0] = 0;
    used_[0] = true;
    std::deque<Index> frontier{0};
    while (!frontier.empty()) {
      const Index g = frontier.front();
      frontier.pop_front();
      for (std::size_t i = 0; i < count; ++i) {
        const Index x = a_.mul(g, gens_[i]);
        const Index y = b_.mul(phi_[g], images_[i]);
        if (phi_[x] == kNone) {
          if (used_[y]) return false;
          phi_[x] = y;
          used_[y] = true;
          frontier.push_back(x);
        } else if (phi_[x] != y) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Index> gens_;
  std::vector<std::vector<Index>> candidates_;
  std::vector<Index> images_;
  std::vector<Index> phi_;
  std::vector<bool> used_;
};

}  // namespace

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.size() != b.size()) return false;
  if (a.is_abelian() != b.is_abelian()) return false;
  if (a.order_profile() != b.order_profile()) return false;
  if (a.center_size() != b.center_size()) return false;
  if (a.derived_subgroup_size() != b.derived_subgroup_size()) return false;
  return IsoSearch(a, b).run();
}

}  // namespace ellgal
