#include "ellgal_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ellgal/aut_group.hpp"
#include "ellgal/enumerator.hpp"
#include "ellgal/errors.hpp"
#include "ellgal/expression.hpp"
#include "ellgal/function_field.hpp"
#include "ellgal/paper_checks.hpp"
#include "ellgal/realizability.hpp"
#include "ellgal/registry.hpp"

namespace ellgal::cli {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  int code = kPass;
  json payload = json::object();
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string format = "human";
  std::optional<std::uint64_t> seed_flag;
  std::optional<std::string> env_seed;
  std::string lattice = "generic";
  std::int64_t torsion = 1;
  std::optional<int> example;
  std::size_t cap = 0;
  bool no_iso = false;
  std::string snapshot;
  std::string field = "Q";
  std::string curve;
  std::string params;
  std::string function;
  std::vector<std::string> positional;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text.front() == '-') throw std::invalid_argument(text);
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad seed value '") + text + "' in " + kSeedEnvVar);
  }
}

DegreeOptions degree_options(const Settings& s) {
  DegreeOptions o;
  if (s.seed_flag) {
    o.seed = *s.seed_flag;
  } else if (s.env_seed && !s.env_seed->empty()) {
    o.seed = parse_seed(*s.env_seed);
  }
  return o;
}

LatticeClass lattice_of(const Settings& s) {
  const auto l = parse_lattice(s.lattice);
  if (!l) throw UsageError("unknown lattice '" + s.lattice + "' (generic, square or hex)");
  return *l;
}

std::string aut_text(const AffineAut& g) {
  return std::to_string(g.j) + ":" + g.beta.u().get_str() + ":" + g.beta.v().get_str();
}

json aut_list(const std::vector<AffineAut>& gens) {
  json a = json::array();
  for (const auto& g : gens) a.push_back(aut_text(g));
  return a;
}

/// "j:u:v" or "(j, u, v)" with u, v rationals.
AffineAut parse_generator(LatticeClass lattice, std::string text) {
  std::string cleaned;
  for (const char c : text) {
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    cleaned += (c == ',') ? ':' : c;
  }
  std::vector<std::string> parts;
  std::stringstream ss(cleaned);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw ParseError("generator '" + text + "' is not of the form j:u:v", 0);
  try {
    std::size_t used = 0;
    const int j = std::stoi(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    Rational u(parts[1]), v(parts[2]);
    u.canonicalize();
    v.canonicalize();
    const int units = unit_order(lattice);
    return AffineAut{lattice, static_cast<int>(mod_floor(j, units)), TorsionPoint(lattice, u, v)};
  } catch (const std::invalid_argument&) {
    throw ParseError("generator '" + text + "' has a malformed number", 0);
  }
}

GroupLabel label_arg(const Settings& s) {
  if (s.positional.size() != 1) throw UsageError("expected exactly one group label");
  return parse_group_label(s.positional.front());
}

json factors_json(const std::pair<Integer, Integer>& f) {
  return json::array({f.first.get_str(), f.second.get_str()});
}

json label_json(const GroupLabel& label) {
  json j;
  j["label"] = label.describe();
  j["text"] = label.to_string();
  j["order"] = label.order();
  if (label.h()) j["h"] = *label.h();
  return j;
}

Outcome cmd_classify(const Settings& s) {
  const LatticeClass lattice = lattice_of(s);
  if (s.positional.empty()) throw UsageError("classify needs at least one generator j:u:v");
  std::vector<AffineAut> gens;
  for (const auto& p : s.positional) gens.push_back(parse_generator(lattice, p));
  const FiniteSubgroup g = closure(gens, s.cap ? s.cap : kDefaultClosureCap);
  Outcome out;
  out.payload["lattice"] = lattice_name(lattice);
  out.payload["generators"] = aut_list(gens);
  out.payload["order"] = g.order();
  out.payload["torsion_factors"] = factors_json(g.torsion_part.invariant_factors);
  out.payload["unit_part_order"] = g.unit_part_order;
  try {
    out.payload.update(label_json(classify(g)));
  } catch (const ClassificationError& e) {
    out.code = kFail;
    out.payload["reason"] = e.what();
  }
  return out;
}

Outcome cmd_realize(const Settings& s) {
  const GroupLabel label = label_arg(s);
  Outcome out;
  out.payload["requested"] = label.describe();
  Witness w;
  try {
    w = realize(label);
  } catch (const NotRealizableError& e) {
    out.code = kFail;
    out.payload["reason"] = e.what();
    return out;
  }
  const FiniteSubgroup g = closure(w.generators, s.cap ? s.cap : kDefaultClosureCap);
  const GroupLabel got = classify(g);
  out.payload["lattice"] = lattice_name(w.lattice);
  out.payload["generators"] = aut_list(w.generators);
  out.payload["order"] = g.order();
  out.payload["classified"] = got.describe();
  out.payload["matches"] = got == label;
  if (w.scale_data) {
    const ScaleData& d = *w.scale_data;
    out.payload["scale_data"] = {{"a", d.a}, {"b", d.b}, {"d", d.d}, {"h", d.h},
                                 {"p", d.p}, {"q", d.q}, {"r", d.r}, {"s", d.s},
                                 {"lambda", d.lambda.to_string()}, {"condition_e", d.condition_e}};
  }
  if (!(got == label)) out.code = kFail;
  return out;
}

Outcome cmd_galois_check(const Settings& s) {
  const GroupLabel label = label_arg(s);
  const AdmissibilityReport rep = galois_admissible(label);
  Outcome out;
  out.payload["label"] = label.describe();
  out.payload["order"] = label.order();
  out.payload["subgroup_realizable"] = rep.subgroup_realizable;
  out.payload["admissible"] = rep.galois_realizable;
  if (rep.h) out.payload["h"] = *rep.h;
  if (rep.norm_form_pair) out.payload["norm_form"] = {rep.norm_form_pair->first, rep.norm_form_pair->second};
  if (!rep.galois_realizable) {
    out.code = kFail;
    out.payload["reason"] = rep.failure_reason;
  }
  return out;
}

json census_json(const CensusReport& rep) {
  json counts = json::object();
  for (const auto& [k, v] : rep.label_counts) counts[k] = v;
  return counts;
}

Outcome cmd_enumerate(const Settings& s, bool check) {
  const LatticeClass lattice = lattice_of(s);
  if (s.torsion < 1) throw UsageError("--torsion must be positive");
  const EnumerationResult res = enumerate_subgroups(lattice, s.torsion, s.cap ? s.cap : kDefaultAmbientCap);
  CensusOptions opts;
  opts.check_isomorphism = check && !s.no_iso;
  const CensusReport rep = census_check(res, opts);
  Outcome out;
  out.payload["lattice"] = lattice_name(lattice);
  out.payload["torsion"] = s.torsion;
  out.payload["subgroups"] = rep.subgroup_count;
  out.payload["classification_failures"] = rep.classification_failures;
  out.payload["labels"] = census_json(rep);
  if (!s.snapshot.empty()) {
    std::ofstream f(s.snapshot);
    if (!f) throw UsageError("cannot write snapshot to '" + s.snapshot + "'");
    write_snapshot(f, res);
    out.payload["snapshot"] = s.snapshot;
  }
  if (check) {
    out.payload["passed"] = rep.passed;
    out.payload["violations"] = rep.violations;
    if (!rep.passed) out.code = kFail;
  }
  return out;
}

Outcome cmd_verify_paper(const Settings& s) {
  const auto results = verify_paper(s.example, degree_options(s));
  Outcome out;
  json checks = json::array();
  bool all = true;
  for (const auto& r : results) {
    json c;
    c["name"] = r.name;
    c["status"] = r.passed ? "pass" : "fail";
    json facts = json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    c["facts"] = facts;
    c["failures"] = r.failures;
    checks.push_back(c);
    all = all && r.passed;
  }
  if (results.size() == 1) {
    for (const char* key : {"degree", "label", "group_order"}) {
      if (auto v = results.front().find(key)) out.payload[key] = *v;
    }
  }
  out.payload["seed"] = degree_options(s).seed;
  out.payload["checks"] = checks;
  if (!all) out.code = kFail;
  return out;
}

Parameters parse_params(const std::string& text) {
  Parameters p;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    if (item.size() < 3 || item[1] != '=' || !std::isalpha(static_cast<unsigned char>(item[0]))) {
      throw UsageError("bad parameter '" + item + "' (expected letter=value)");
    }
    try {
      Rational q(item.substr(2));
      q.canonicalize();
      p[item[0]] = q;
    } catch (const std::invalid_argument&) {
      throw UsageError("bad parameter value in '" + item + "'");
    }
  }
  return p;
}

Outcome cmd_degree(const Settings& s) {
  std::vector<std::string> fns = s.positional;
  if (!s.function.empty()) fns.push_back(s.function);
  if (fns.size() != 1) throw UsageError("degree needs exactly one function of x and y");
  if (s.curve.empty()) throw UsageError("degree needs --curve");
  const RingTag ring = field_from_tag(s.field);
  const Parameters params = parse_params(s.params);
  const RatFunc f = expression_ratfunc(parse_expression(s.curve), ring, params);
  if (!f.is_polynomial()) throw PreconditionError("curve is not a polynomial in x");
  auto curve = std::make_shared<const Curve>(f.num());
  const FFElem fn = expression_ffelem(parse_expression(fns.front()), curve, params);
  const DegreeOptions opts = degree_options(s);
  Outcome out;
  out.payload["curve"] = curve->to_string();
  out.payload["function"] = fn.to_string();
  out.payload["seed"] = opts.seed;
  try {
    out.payload["degree"] = map_degree(fn, opts);
  } catch (const DegeneracyError& e) {
    out.code = kFail;
    out.payload["reason"] = e.what();
  }
  return out;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& lines) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, lines);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
    if (scalars) {
      std::string joined;
      for (const auto& e : j) joined += (joined.empty() ? "" : ", ") + (e.is_string() ? e.get<std::string>() : e.dump());
      lines.emplace_back(prefix, joined);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", lines);
    }
  } else {
    lines.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

const char* status_of(int code) {
  switch (code) {
    case kPass: return "pass";
    case kFail: return "fail";
    default: return "error";
  }
}

void emit(std::ostream& out, const std::string& format, const std::string& command, int code, const json& payload) {
  if (format == "structured") {
    json record;
    record["version"] = kFormatVersion;
    record["command"] = command;
    record["status"] = status_of(code);
    record["exit_code"] = code;
    record["payload"] = payload;
    out << record.dump() << '\n';
    return;
  }
  out << "status: " << status_of(code) << '\n';
  std::vector<std::pair<std::string, std::string>> lines;
  flatten(payload, "", lines);
  for (const auto& [k, v] : lines) out << k << ": " << v << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed) {
  Settings s;
  s.env_seed = env_seed;

  CLI::App app{"Finite automorphism groups of elliptic curves and Galois points of genus-one curves", "ellgal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output mode")->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--seed", s.seed_flag, "Seed for randomized degree checks (overrides ELLGAL_SEED)");

  auto add_lattice = [&](CLI::App* c) {
    c->add_option("--lattice", s.lattice, "generic, square or hex")
        ->check(CLI::IsMember({"generic", "square", "hex", "hexagonal"}));
  };
  auto add_cap = [&](CLI::App* c) { c->add_option("--cap", s.cap, "Element cap"); };

  auto* classify_cmd = app.add_subcommand("classify", "Classify the group generated by affine maps j:u:v");
  add_lattice(classify_cmd);
  add_cap(classify_cmd);
  classify_cmd->add_option("generators", s.positional, "Generators j:u:v (rotation e^j, translation u + v*zeta)");

  auto* realize_cmd = app.add_subcommand("realize", "Construct a witness subgroup for a label");
  realize_cmd->add_option("label", s.positional, "Group label, e.g. E(7,3) or BD(2,4)");
  add_cap(realize_cmd);

  auto* galois_cmd = app.add_subcommand("galois-check", "Decide whether a group occurs at an outer Galois point");
  galois_cmd->add_option("label", s.positional, "Group label");

  auto* enum_cmd = app.add_subcommand("enumerate", "List every subgroup of E[N] x| mu");
  auto* census_cmd = app.add_subcommand("census-check", "Enumerate and cross-check the classification");
  for (auto* c : {enum_cmd, census_cmd}) {
    add_lattice(c);
    add_cap(c);
    c->add_option("--torsion", s.torsion, "Torsion level N");
    c->add_option("--snapshot", s.snapshot, "Write a census snapshot to this file");
  }
  census_cmd->add_flag("--no-iso", s.no_iso, "Skip the brute-force isomorphism checks");

  auto* paper_cmd = app.add_subcommand("verify-paper", "Reproduce the worked examples and Galois covers");
  paper_cmd->add_option("--example", s.example, "Only this registry example (13..19)");

  auto* degree_cmd = app.add_subcommand("degree", "Degree of a function on y^2 = f(x)");
  degree_cmd->add_option("--field", s.field, "Q, e3, e4 or e6")->check(CLI::IsMember({"Q", "e3", "e4", "e6"}));
  degree_cmd->add_option("--curve", s.curve, "f(x)");
  degree_cmd->add_option("--params", s.params, "Parameter values, e.g. b=2,a=3");
  degree_cmd->add_option("expr", s.positional, "Function of x and y");
  degree_cmd->add_option("--function", s.function, "Function of x and y (use when it starts with '-')");

  std::string command = "ellgal";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    emit(out, s.format == "structured" ? s.format : "human", command, kUsage, json{{"error", e.what()}});
    return kUsage;
  }
  command = app.get_subcommands().front()->get_name();

  Outcome result;
  try {
    if (command == "classify") result = cmd_classify(s);
    else if (command == "realize") result = cmd_realize(s);
    else if (command == "galois-check") result = cmd_galois_check(s);
    else if (command == "enumerate") result = cmd_enumerate(s, false);
    else if (command == "census-check") result = cmd_enumerate(s, true);
    else if (command == "verify-paper") result = cmd_verify_paper(s);
    else if (command == "degree") result = cmd_degree(s);
  } catch (const UsageError& e) {
    result = {kUsage, json{{"error", e.what()}}};
  } catch (const ParseError& e) {
    result = {kUsage, json{{"error", e.what()}, {"position", e.position()}}};
  } catch (const PreconditionError& e) {
    result = {kUsage, json{{"error", e.what()}}};
  } catch (const CapExceededError& e) {
    result = {kCapExceeded, json{{"error", e.what()}}};
  } catch (const Error& e) {
    result = {kFail, json{{"error", e.what()}}};
  } catch (const std::exception& e) {
    result = {kFail, json{{"error", std::string("internal: ") + e.what()}}};
  }
  if (result.code == kUsage || result.code == kCapExceeded) err << result.payload["error"].get<std::string>() << '\n';
  emit(out, s.format, command, result.code, result.payload);
  return result.code;
}

}  // namespace ellgal::cli
