#include "ellgal/registry.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "ellgal/errors.hpp"

namespace ellgal {

namespace detail {
extern const std::string_view kEmbeddedRegistry;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::pair<std::string, std::string> split_pair(const std::string& text, std::string_view sep, std::size_t line) {
  const auto at = text.find(sep);
  if (at == std::string::npos) throw ParseError("expected '" + std::string(sep) + "' in: " + text, line);
  return {trim(std::string_view(text).substr(0, at)), trim(std::string_view(text).substr(at + sep.size()))};
}

Rational parse_rational(const std::string& text, std::size_t line) {
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + text + "'", line);
  }
}

int parse_int(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + text + "'", line);
  }
}

void finish(RegistryEntry& e, std::size_t line) {
  for (const char c : e.params) {
    if (std::string_view("xystw").find(c) != std::string_view::npos) {
      throw ParseError(std::string("parameter letter '") + c + "' is reserved", line);
    }
  }
  if (!e.params.empty() && e.specializations.empty()) {
    throw ParseError("example " + std::to_string(e.id) + " has parameters but no specialization", line);
  }
  if (e.curve.empty() || e.s.empty() || e.t.empty() || e.F.empty() || e.generators.empty()) {
    throw ParseError("example " + std::to_string(e.id) + " is incomplete", line);
  }
  field_from_tag(e.field);
}

Poly as_polynomial(const RatFunc& r, const std::string& what) {
  if (!r.is_polynomial()) throw PreconditionError(what + " is not a polynomial");
  return r.num();
}

}  // namespace

RingTag field_from_tag(std::string_view tag) {
  if (tag == "Q") return RingTag::rationals();
  if (tag == "e3") return RingTag::e3();
  if (tag == "e4") return RingTag::e4();
  if (tag == "e6") return RingTag::e6();
  throw ParseError("unknown field tag '" + std::string(tag) + "'", 0);
}

RingTag RegistryEntry::ring() const { return field_from_tag(field); }

std::vector<Parameters> RegistryEntry::parameter_sets() const {
  if (specializations.empty()) return {Parameters{}};
  std::vector<Parameters> out;
  for (const auto& values : specializations) {
    Parameters p;
    for (std::size_t i = 0; i < params.size(); ++i) p[params[i]] = values[i];
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<RegistryEntry> parse_registry(std::string_view text) {
  std::vector<RegistryEntry> out;
  std::optional<RegistryEntry> cur;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string l = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']' || l.rfind("[example ", 0) != 0) throw ParseError("bad block header: " + l, line);
      if (cur) {
        finish(*cur, line);
        out.push_back(std::move(*cur));
      }
      cur.emplace();
      cur->id = parse_int(trim(l.substr(9, l.size() - 10)), line);
      continue;
    }
    if (!cur) throw ParseError("key outside a block", line);
    const auto [key, value] = split_pair(l, "=", line);
    if (key == "field") {
      cur->field = value;
    } else if (key == "params") {
      cur->params.clear();
      for (const char c : value) {
        if (std::isalpha(static_cast<unsigned char>(c))) cur->params += c;
        else if (!std::isspace(static_cast<unsigned char>(c))) throw ParseError("bad params", line);
      }
    } else if (key == "specialize") {
      std::istringstream vs(value);
      std::vector<Rational> vals;
      for (std::string tok; vs >> tok;) vals.push_back(parse_rational(tok, line));
      if (vals.size() != cur->params.size()) throw ParseError("specialization arity mismatch", line);
      cur->specializations.push_back(std::move(vals));
    } else if (key == "curve") {
      cur->curve = value;
    } else if (key == "gen") {
      cur->generators.push_back(split_pair(value, ";", line));
    } else if (key == "s") {
      cur->s = value;
    } else if (key == "t") {
      cur->t = value;
    } else if (key == "F") {
      cur->F = value;
    } else if (key == "group") {
      try {
        cur->group = parse_group_label(value);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad group label: ") + e.what(), line);
      }
    } else if (key == "degree") {
      cur->degree = parse_int(value, line);
    } else if (key == "translation") {
      const auto [point, image] = split_pair(value, "->", line);
      const auto [px, py] = split_pair(point, ";", line);
      const auto [xi, eta] = split_pair(image, ";", line);
      cur->translations.push_back({px, py, xi, eta});
    } else {
      throw ParseError("unknown key '" + key + "'", line);
    }
  }
  if (cur) {
    finish(*cur, line);
    out.push_back(std::move(*cur));
  }
  return out;
}

const std::vector<RegistryEntry>& paper_registry() {
  static const std::vector<RegistryEntry> entries = parse_registry(detail::kEmbeddedRegistry);
  return entries;
}

const RegistryEntry* find_registry_entry(int id) {
  for (const auto& e : paper_registry()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

CurvePtr build_curve(const RegistryEntry& entry, const Parameters& params) {
  const RatFunc f = expression_ratfunc(parse_expression(entry.curve), entry.ring(), params);
  return std::make_shared<const Curve>(as_polynomial(f, "curve"));
}

AutMap build_map(const CurvePtr& curve, std::string_view xi, std::string_view eta, const Parameters& params) {
  return AutMap{expression_ffelem(parse_expression(xi), curve, params),
                expression_ffelem(parse_expression(eta), curve, params)};
}

CoverSpec build_cover_spec(const RegistryEntry& entry, const Parameters& params) {
  CurvePtr curve = build_curve(entry, params);
  std::vector<AutMap> gens;
  for (const auto& [xi, eta] : entry.generators) gens.push_back(build_map(curve, xi, eta, params));
  FFElem s = expression_ffelem(parse_expression(entry.s), curve, params);
  FFElem t = expression_ffelem(parse_expression(entry.t), curve, params);
  BiPoly F = expression_bipoly(parse_expression(entry.F), entry.ring(), params);
  return CoverSpec{curve, std::move(gens), std::move(s), std::move(t), std::move(F), entry.group};
}

TranslationOutcome check_translation(const RegistryEntry& entry, const TranslationCheck& check,
                                     const Parameters& params) {
  CurvePtr curve = build_curve(entry, params);
  const RingTag ring = entry.ring();
  const QuadElem px = expression_constant(parse_expression(check.px), ring, params);
  const QuadElem py = expression_constant(parse_expression(check.py), ring, params);
  TranslationOutcome out{translation_map(curve, CurvePoint{std::make_pair(px, py)}),
                         build_map(curve, check.xi, check.eta, params), false};
  out.matches = out.computed == out.expected;
  return out;
}

}  // namespace ellgal
