#include "ellgal/group_label.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ellgal/errors.hpp"

namespace ellgal {

std::vector<std::int64_t> invariant_factors_of(const std::vector<std::int64_t>& cyclic_orders) {
  // prime -> prime-power parts, one per cyclic factor
  std::map<std::int64_t, std::vector<std::int64_t>> parts;
  for (std::int64_t n : cyclic_orders) {
    if (n < 1) throw PreconditionError("cyclic order must be positive");
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      std::int64_t pk = 1;
      while (n % p == 0) {
        n /= p;
        pk *= p;
      }
      parts[p].push_back(pk);
    }
    if (n > 1) parts[n].push_back(n);
  }
  std::size_t rank = 0;
  for (auto& [p, powers] : parts) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    rank = std::max(rank, powers.size());
  }
  // factors[0] is the largest invariant factor
  std::vector<std::int64_t> factors(rank, 1);
  for (const auto& [p, powers] : parts) {
    for (std::size_t i = 0; i < powers.size(); ++i) factors[i] *= powers[i];
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

namespace {

void require_rotation_order(int l) {
  if (l != 3 && l != 4 && l != 6) {
    throw PreconditionError("exceptional groups need l in {3, 4, 6}, got " + std::to_string(l));
  }
}

}  // namespace

GroupLabel GroupLabel::abelian(const std::vector<std::int64_t>& cyclic_orders) {
  return GroupLabel(Abelian{invariant_factors_of(cyclic_orders)});
}

GroupLabel GroupLabel::dihedral(std::int64_t n) {
  if (n < 3) throw PreconditionError("dihedral groups need n >= 3");
  return GroupLabel(Dihedral{n});
}

GroupLabel GroupLabel::bidihedral(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw PreconditionError("bidihedral parameters must be positive");
  const auto f = invariant_factors_of({m, n});
  if (f.size() < 2) {
    const std::int64_t order = f.empty() ? 1 : f.front();
    if (order < 3) throw PreconditionError("BD(" + std::to_string(m) + "," + std::to_string(n) +
                                           ") is abelian");
    return dihedral(order);
  }
  if (f[1] < 3) throw PreconditionError("bidihedral groups need n >= 3");
  return GroupLabel(Bidihedral{f[0], f[1]});
}

GroupLabel GroupLabel::exc1(std::int64_t k, int l) {
  require_rotation_order(l);
  if (k < 1) throw PreconditionError("E(k,l) needs k >= 1");
  return GroupLabel(Exc1{k, l});
}

GroupLabel GroupLabel::exc2(std::int64_t m, std::int64_t k, int l) {
  require_rotation_order(l);
  if (m < 1 || k < 1) throw PreconditionError("E(m,k,l) needs m, k >= 1");
  if (m == 1) return exc1(k, l);
  return GroupLabel(Exc2{m, k, l});
}

LabelKind GroupLabel::kind() const {
  switch (value_.index()) {
    case 0: return LabelKind::abelian;
    case 1: return LabelKind::dihedral;
    case 2: return LabelKind::bidihedral;
    case 3: return LabelKind::exc1;
    default: return LabelKind::exc2;
  }
}

std::int64_t GroupLabel::order() const {
  if (const auto* a = as_abelian()) {
    std::int64_t n = 1;
    for (auto d : a->factors) n *= d;
    return n;
  }
  if (const auto* d = as_dihedral()) return 2 * d->n;
  if (const auto* b = as_bidihedral()) return 2 * b->m * b->n;
  if (const auto* e = as_exc1()) return e->k * e->l;
  const auto& e = *as_exc2();
  return e.m * e.m * e.k * e.l;
}

GroupLabel GroupLabel::with_h(std::int64_t h) const {
  GroupLabel copy = *this;
  copy.h_ = h;
  return copy;
}

std::string GroupLabel::to_string() const {
  std::ostringstream os;
  if (const auto* a = as_abelian()) {
    if (a->factors.empty()) return "Z1";
    const bool uniform = a->factors.size() > 1 &&
                         std::all_of(a->factors.begin(), a->factors.end(),
                                     [&](auto d) { return d == a->factors.front(); });
    if (uniform) {
      os << "Z" << a->factors.front() << "^" << a->factors.size();
    } else {
      for (std::size_t i = 0; i < a->factors.size(); ++i) {
        if (i) os << "x";
        os << "Z" << a->factors[i];
      }
    }
  } else if (const auto* d = as_dihedral()) {
    os << "D" << d->n;
  } else if (const auto* b = as_bidihedral()) {
    os << "BD(" << b->m << "," << b->n << ")";
  } else if (const auto* e = as_exc1()) {
    os << "E(" << e->k << "," << e->l << ")";
  } else {
    const auto& e2 = *as_exc2();
    os << "E(" << e2.m << "," << e2.k << "," << e2.l << ")";
  }
  return os.str();
}

std::string GroupLabel::describe() const {
  std::ostringstream os;
  if (const auto* a = as_abelian()) {
    os << "Abelian(";
    if (a->factors.size() == 1) os << "1,";
    if (a->factors.empty()) os << "1,1";
    for (std::size_t i = 0; i < a->factors.size(); ++i) os << (i ? "," : "") << a->factors[i];
    os << ")";
  } else if (const auto* d = as_dihedral()) {
    os << "Dihedral(" << d->n << ")";
  } else if (const auto* b = as_bidihedral()) {
    os << "Bidihedral(" << b->m << "," << b->n << ")";
  } else if (const auto* e = as_exc1()) {
    os << "Exc1(" << e->k << "," << e->l << ")";
  } else {
    const auto& e2 = *as_exc2();
    os << "Exc2(" << e2.m << "," << e2.k << "," << e2.l << ")";
  }
  return os.str();
}

namespace {

class LabelParser {
 public:
  explicit LabelParser(std::string_view text) : text_(text) {}

  GroupLabel parse() {
    skip_ws();
    if (at_end()) fail("empty group label");
    GroupLabel label;
    const char c = peek();
    if (c == 'Z') {
      label = parse_abelian();
    } else if (c == 'D') {
      ++pos_;
      const auto start = pos_;
      const std::int64_t n = number();
      label = make([&] { return GroupLabel::dihedral(n); }, start);
    } else if (c == 'B') {
      expect("BD");
      expect("(");
      const auto start = pos_;
      const std::int64_t m = number();
      expect(",");
      const std::int64_t n = number();
      expect(")");
      label = make([&] { return GroupLabel::bidihedral(m, n); }, start);
    } else if (c == 'E') {
      ++pos_;
      expect("(");
      const auto start = pos_;
      std::vector<std::int64_t> args{number()};
      while (try_consume(',')) args.push_back(number());
      expect(")");
      if (args.size() == 2) {
        label = make([&] { return GroupLabel::exc1(args[0], static_cast<int>(args[1])); }, start);
      } else if (args.size() == 3) {
        label = make(
            [&] { return GroupLabel::exc2(args[0], args[1], static_cast<int>(args[2])); }, start);
      } else {
        fail("E(...) takes two or three arguments", start);
      }
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    skip_ws();
    if (!at_end()) fail("trailing input");
    return label;
  }

 private:
  GroupLabel parse_abelian() {
    std::vector<std::int64_t> orders;
    for (;;) {
      skip_ws();
      expect("Z");
      const std::int64_t m = number();
      if (m < 1) fail("cyclic order must be positive");
      std::int64_t r = 1;
      if (try_consume('^')) {
        r = number();
        if (r < 1 || r > 64) fail("exponent out of range");
      }
      for (std::int64_t i = 0; i < r; ++i) orders.push_back(m);
      skip_ws();
      if (!try_consume('x')) break;
    }
    return GroupLabel::abelian(orders);
  }

  template <typename F>
  GroupLabel make(F&& f, std::size_t where) {
    try {
      return f();
    } catch (const PreconditionError& e) {
      fail(e.what(), where);
    }
  }

  std::int64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000'000LL) fail("number too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  void expect(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) {
      fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  bool try_consume(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t where) {
    throw ParseError(msg, where);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupLabel parse_group_label(std::string_view text) { return LabelParser(text).parse(); }

}  // namespace ellgal
