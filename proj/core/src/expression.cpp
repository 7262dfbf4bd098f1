#include "ellgal/expression.hpp"

#include <cctype>
#include <set>

#include "ellgal/errors.hpp"

namespace ellgal {

namespace {

Expr make(ExprNode::Kind kind, Expr lhs = nullptr, Expr rhs = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (peek() == '=') {
      ++pos_;
      e = make(ExprNode::Kind::sub, e, sum());
      skip();
    }
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return e;
      ++pos_;
      e = make(c == '+' ? ExprNode::Kind::add : ExprNode::Kind::sub, e, product());
    }
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        e = make(c == '*' ? ExprNode::Kind::mul : ExprNode::Kind::div, e, unary());
      } else if (starts_factor(c)) {
        e = make(ExprNode::Kind::mul, e, power());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return make(ExprNode::Kind::neg, unary());
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer exponent");
    }
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::pow;
    n->lhs = base;
    n->value = digits();
    if (negative) n->value = -n->value;
    return n;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Expr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::number;
      n->value = digits();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::variable;
      n->name = c;
      ++pos_;
      return n;
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect(const Expr& e, std::set<char>& out) {
  if (!e) return;
  if (e->kind == ExprNode::Kind::variable) out.insert(e->name);
  collect(e->lhs, out);
  collect(e->rhs, out);
}

template <class T>
T power_by_squaring(const T& base, Integer n, const T& one, const std::function<T(const T&)>& invert) {
  if (n < 0) return power_by_squaring(invert(base), -n, one, invert);
  T result = one;
  T b = base;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = result * b;
    n /= 2;
    if (n > 0) b = b * b;
  }
  return result;
}

template <class T>
std::function<T(char)> scalar_variables(RingTag ring, const Parameters& params,
                                        const std::function<T(const QuadElem&)>& lift,
                                        const std::function<std::optional<T>(char)>& extra) {
  return [=](char v) -> T {
    if (auto r = extra(v)) return *r;
    if (v == 'w') return lift(QuadElem::zeta(ring));
    const auto it = params.find(v);
    if (it != params.end()) return lift(QuadElem(ring, it->second));
    throw ParseError(std::string("unbound variable '") + v + "'", 0);
  };
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string free_variables(const Expr& e) {
  std::set<char> vars;
  collect(e, vars);
  return std::string(vars.begin(), vars.end());
}

QuadElem expression_constant(const Expr& e, RingTag ring, const Parameters& params) {
  ExprAlgebra<QuadElem> alg;
  alg.number = [ring](const Integer& n) { return QuadElem(ring, Rational(n)); };
  alg.variable = scalar_variables<QuadElem>(
      ring, params, [](const QuadElem& q) { return q; }, [](char) { return std::optional<QuadElem>(); });
  alg.power = [ring](const QuadElem& b, const Integer& n) { return b.pow(n.get_si()); };
  return evaluate_expression(e, alg);
}

RatFunc expression_ratfunc(const Expr& e, RingTag ring, const Parameters& params) {
  ExprAlgebra<RatFunc> alg;
  const auto lift = [](const QuadElem& q) { return RatFunc(Poly::constant(q)); };
  alg.number = [ring](const Integer& n) { return RatFunc(Poly::constant(ring, Rational(n))); };
  alg.variable = scalar_variables<RatFunc>(ring, params, lift, [ring](char v) -> std::optional<RatFunc> {
    if (v == 'x') return RatFunc(Poly::x(ring));
    return std::nullopt;
  });
  alg.power = [ring](const RatFunc& b, const Integer& n) {
    return power_by_squaring<RatFunc>(b, n, RatFunc(Poly::constant(ring, 1)),
                                      [](const RatFunc& r) { return r.inverse(); });
  };
  return evaluate_expression(e, alg);
}

FFElem expression_ffelem(const Expr& e, const CurvePtr& curve, const Parameters& params) {
  const RingTag ring = curve->ring();
  ExprAlgebra<FFElem> alg;
  const auto lift = [curve](const QuadElem& q) { return FFElem::constant(curve, q); };
  alg.number = [curve, ring](const Integer& n) { return FFElem::constant(curve, QuadElem(ring, Rational(n))); };
  alg.variable = scalar_variables<FFElem>(ring, params, lift, [curve](char v) -> std::optional<FFElem> {
    if (v == 'x') return FFElem::x(curve);
    if (v == 'y') return FFElem::y(curve);
    return std::nullopt;
  });
  alg.power = [](const FFElem& b, const Integer& n) { return b.pow(n.get_si()); };
  return evaluate_expression(e, alg);
}

BiPoly expression_bipoly(const Expr& e, RingTag ring, const Parameters& params) {
  ExprAlgebra<BiPoly> alg;
  const auto lift = [](const QuadElem& q) { return BiPoly::constant(q); };
  alg.number = [ring](const Integer& n) { return BiPoly::constant(QuadElem(ring, Rational(n))); };
  alg.variable = scalar_variables<BiPoly>(ring, params, lift, [ring](char v) -> std::optional<BiPoly> {
    if (v == 's') return BiPoly::s(ring);
    if (v == 't') return BiPoly::t(ring);
    return std::nullopt;
  });
  alg.divide = [](const BiPoly& a, const BiPoly& b) { return a.scaled(b.as_constant().inverse()); };
  alg.power = [ring](const BiPoly& b, const Integer& n) {
    if (n < 0) throw PreconditionError("negative power in a polynomial");
    return power_by_squaring<BiPoly>(b, n, BiPoly::constant(QuadElem::one(ring)),
                                     [](const BiPoly&) -> BiPoly { throw PreconditionError("unreachable"); });
  };
  return evaluate_expression(e, alg);
}

}  // namespace ellgal
