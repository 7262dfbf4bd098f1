#include "ellgal/enumerator.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ellgal/errors.hpp"
#include "ellgal/realizability.hpp"

namespace ellgal {

namespace {

using Key = std::int32_t;

struct Candidate {
  std::vector<Key> keys;  // sorted
  std::vector<Key> gens;
};

class Ambient {
 public:
  Ambient(LatticeClass lattice, std::int64_t level)
      : frame_(lattice, level), n_(static_cast<std::size_t>(frame_.ambient_size())), table_(n_ * n_) {
    for (std::size_t x = 0; x < n_; ++x) {
      const auto ex = frame_.from_key(static_cast<std::int64_t>(x));
      for (std::size_t y = 0; y < n_; ++y) {
        table_[x * n_ + y] =
            static_cast<Key>(frame_.key(frame_.mul(ex, frame_.from_key(static_cast<std::int64_t>(y)))));
      }
    }
  }

  const detail::CompactFrame& frame() const { return frame_; }
  std::size_t size() const { return n_; }

  std::vector<Key> generate(const std::vector<Key>& gens, std::vector<char>& mark) const {
    std::fill(mark.begin(), mark.end(), 0);
    std::vector<Key> out{0};
    mark[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::size_t row = static_cast<std::size_t>(out[i]) * n_;
      for (const Key g : gens) {
        const Key z = table_[row + static_cast<std::size_t>(g)];
        if (!mark[static_cast<std::size_t>(z)]) {
          mark[static_cast<std::size_t>(z)] = 1;
          out.push_back(z);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  detail::CompactFrame frame_;
  std::size_t n_;
  std::vector<Key> table_;
};

std::string describe_subgroup(const FiniteSubgroup& g) {
  std::ostringstream os;
  os << lattice_name(g.lattice) << " subgroup of order " << g.order() << " generated by";
  if (g.generators.empty()) os << " nothing";
  for (const auto& a : g.generators) os << " " << a.to_string();
  return os.str();
}

}  // namespace

EnumerationResult enumerate_subgroups(LatticeClass lattice, std::int64_t level, std::size_t cap) {
  if (level < 1) throw PreconditionError("torsion level must be positive");
  const auto ambient_size = static_cast<std::size_t>(unit_order(lattice)) *
                            static_cast<std::size_t>(level) * static_cast<std::size_t>(level);
  if (ambient_size > cap) {
    throw CapExceededError("ambient group of order " + std::to_string(ambient_size) +
                           " exceeds cap " + std::to_string(cap));
  }
  const Ambient ambient(lattice, level);
  std::vector<char> mark(ambient.size());

  std::vector<Candidate> found{{{0}, {}}};
  std::map<std::vector<Key>, std::size_t> index{{found.front().keys, 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<char> inside(ambient.size(), 0);
    for (const Key k : found[i].keys) inside[static_cast<std::size_t>(k)] = 1;
    for (std::size_t x = 1; x < ambient.size(); ++x) {
      if (inside[x]) continue;
      auto gens = found[i].gens;
      gens.push_back(static_cast<Key>(x));
      auto keys = ambient.generate(gens, mark);
      if (index.emplace(keys, found.size()).second) found.push_back({std::move(keys), std::move(gens)});
    }
  }

  EnumerationResult result;
  result.lattice = lattice;
  result.level = level;
  const auto& frame = ambient.frame();
  for (const auto& c : found) {
    std::vector<std::int64_t> keys(c.keys.begin(), c.keys.end());
    std::vector<AffineAut> gens;
    for (const Key g : c.gens) gens.push_back(frame.decode(frame.from_key(g)));
    result.subgroups.push_back(detail::subgroup_from_keys(frame, keys, std::move(gens)));
  }
  std::stable_sort(result.subgroups.begin(), result.subgroups.end(),
                   [](const FiniteSubgroup& a, const FiniteSubgroup& b) {
                     if (a.order() != b.order()) return a.order() < b.order();
                     return a.elements < b.elements;
                   });
  for (const auto& g : result.subgroups) {
    try {
      result.labels.emplace_back(classify(g));
      result.classification_errors.emplace_back();
    } catch (const ClassificationError& e) {
      result.labels.emplace_back(std::nullopt);
      result.classification_errors.emplace_back(e.what());
    }
  }
  return result;
}

std::size_t CensusReport::count(const GroupLabel& label) const {
  const auto it = label_counts.find(label.to_string());
  return it == label_counts.end() ? 0 : it->second;
}

CensusReport census_check(const EnumerationResult& result, const CensusOptions& options) {
  CensusReport rep;
  rep.subgroup_count = result.size();
  const auto fail = [&](const FiniteSubgroup& g, const std::string& why) {
    rep.passed = false;
    rep.violations.push_back(why + ": " + describe_subgroup(g));
  };
  for (std::size_t i = 0; i < result.size(); ++i) {
    const FiniteSubgroup& g = result.subgroups[i];
    if (!result.labels[i]) {
      ++rep.classification_failures;
      fail(g, "classification failed (" + result.classification_errors[i] + ")");
      continue;
    }
    const GroupLabel& label = *result.labels[i];
    ++rep.label_counts[label.to_string()];

    if (label.is_abelian() && g.unit_part_order > 1) {
      const auto& list = rotation_abelian_labels();
      if (std::find(list.begin(), list.end(), label) == list.end()) {
        fail(g, "abelian label " + label.to_string() + " with a rotation part is not in the rotation list");
      }
    }
    if (const auto* e = label.as_exc1()) {
      if (!nondegenerate_h(e->k, e->l)) fail(g, "E(k,l) label without a non-abelian h");
    }
    if (const auto* e = label.as_exc2()) {
      if (!exists_h(e->k, e->l)) fail(g, "E(m,k,l) label without an admissible h");
    }
    if (!subgroup_admissible(label).subgroup_realizable) {
      fail(g, "label " + label.to_string() + " is outside the subgroup list");
    }
    if (label.is_abelian() && galois_admissible(label).galois_realizable && label.order() > 9) {
      fail(g, "Galois-admissible abelian label of order > 9");
    }
    if (static_cast<std::int64_t>(g.order()) != label.order()) {
      fail(g, "label order " + std::to_string(label.order()) + " differs from |G|");
    }
    if (options.check_isomorphism && g.order() <= options.iso_bound && !iso_check(g, label, options.iso_bound)) {
      fail(g, "not isomorphic to the canonical " + label.to_string());
    }
  }
  return rep;
}

void write_snapshot(std::ostream& out, const EnumerationResult& result) {
  out << kSnapshotHeader << "\n";
  for (std::size_t i = 0; i < result.size(); ++i) {
    const auto& g = result.subgroups[i];
    out << lattice_name(result.lattice) << '\t' << result.level << '\t' << g.order() << '\t'
        << (result.labels[i] ? result.labels[i]->to_string() : std::string("?")) << '\t';
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      const auto& a = g.generators[k];
      if (k) out << ' ';
      out << a.j << ':' << a.beta.u() << ':' << a.beta.v();
    }
    out << '\n';
  }
}

std::vector<SnapshotRecord> read_snapshot(std::istream& in) {
  std::string line;
  std::size_t pos = 0;
  if (!std::getline(in, line) || line != kSnapshotHeader) {
    throw ParseError("expected header '" + std::string(kSnapshotHeader) + "'", 0);
  }
  pos += line.size() + 1;
  std::vector<SnapshotRecord> out;
  while (std::getline(in, line)) {
    const std::size_t start = pos;
    pos += line.size() + 1;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t from = 0;
    for (;;) {
      const auto tab = line.find('\t', from);
      fields.push_back(line.substr(from, tab == std::string::npos ? std::string::npos : tab - from));
      if (tab == std::string::npos) break;
      from = tab + 1;
    }
    if (fields.size() != 5) throw ParseError("expected 5 tab-separated fields", start);
    SnapshotRecord rec;
    const auto lattice = parse_lattice(fields[0]);
    if (!lattice) throw ParseError("unknown lattice '" + fields[0] + "'", start);
    rec.lattice = *lattice;
    try {
      rec.level = std::stoll(fields[1]);
      rec.order = std::stoull(fields[2]);
    } catch (const std::exception&) {
      throw ParseError("bad integer field", start);
    }
    rec.label = fields[3];
    std::istringstream gens(fields[4]);
    std::string tok;
    while (gens >> tok) {
      const auto c1 = tok.find(':');
      const auto c2 = tok.find(':', c1 == std::string::npos ? c1 : c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos) {
        throw ParseError("generator '" + tok + "' is not j:u:v", start);
      }
      try {
        const int j = std::stoi(tok.substr(0, c1));
        Rational u(tok.substr(c1 + 1, c2 - c1 - 1));
        Rational v(tok.substr(c2 + 1));
        u.canonicalize();
        v.canonicalize();
        rec.generators.push_back({rec.lattice, j, TorsionPoint(rec.lattice, u, v)});
      } catch (const std::invalid_argument&) {
        throw ParseError("generator '" + tok + "' has a bad number", start);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace ellgal
