#include "parkbetti/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>
#include <boost/dynamic_bitset.hpp>

#include "json.hpp"

namespace parkbetti {

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents.begin(), exponents.end(), [](std::uint32_t e) { return e <= 1; });
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) out.push_back(i);
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] = std::max(m.exponents[i], b.exponents[i]);
  return m;
}

std::string MonomialIdeal::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables[i];
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MonomialIdeal::format() const {
  std::string out;
  for (const Monomial& m : generators) out += format(m) + "\n";
  return out;
}

std::string MonomialIdeal::to_json() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const Monomial& m : generators) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::object();
    for (std::size_t i : m.support()) entry[variables[i]] = m.exponents[i];
    doc.push_back(std::move(entry));
  }
  return doc.dump();
}

MonomialIdeal minimalize(const MonomialIdeal& ideal) {
  MonomialIdeal out{ideal.variables, {}, true};
  const auto& gens = ideal.generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || !gens[j].divides(gens[i])) continue;
      // Equal generators: keep the first occurrence only.
      redundant = gens[j] != gens[i] || j < i;
    }
    if (!redundant) out.generators.push_back(gens[i]);
  }
  return out;
}

bool same_generators(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.variables != b.variables) return false;
  std::set<Monomial> sa(a.generators.begin(), a.generators.end());
  std::set<Monomial> sb(b.generators.begin(), b.generators.end());
  return sa == sb;
}

MonomialIdeal parking_ideal(const Multigraph& g) {
  MonomialIdeal ideal;
  const std::vector<std::size_t> vs = g.non_sink_vertices();
  for (std::size_t v : vs) ideal.variables.push_back("x" + std::to_string(v + 1));
  for (const Cut& c : enumerate_connected_cuts(g)) {
    Monomial m = Monomial::one(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      m.exponents[i] = static_cast<std::uint32_t>(boundary_degree(g, c.source_side, vs[i]));
    }
    ideal.generators.push_back(std::move(m));
  }
  ideal.minimal = true;
  return ideal;
}

MonomialIdeal cutset_ideal(const Multigraph& g) {
  MonomialIdeal ideal;
  for (const Edge& e : g.edges()) ideal.variables.push_back("y_" + e.label);
  for (const Cut& c : enumerate_connected_cuts(g)) {
    Monomial m = Monomial::one(g.edge_count());
    for (std::size_t e : cut_set(g, c)) m.exponents[e] = 1;
    ideal.generators.push_back(std::move(m));
  }
  ideal.minimal = true;
  return ideal;
}

MonomialIdeal oriented_cutset_ideal(const Multigraph& g) {
  MonomialIdeal ideal;
  for (const Edge& e : g.edges()) {
    ideal.variables.push_back("z1_" + e.label);
    ideal.variables.push_back("z2_" + e.label);
  }
  for (const Cut& c : enumerate_connected_cuts(g)) {
    Monomial m = Monomial::one(2 * g.edge_count());
    for (std::size_t e : cut_set(g, c)) {
      const bool tail_in_source = c.source_side.contains(g.edge(e).tail);
      m.exponents[2 * e + (tail_in_source ? 0 : 1)] = 1;
    }
    ideal.generators.push_back(std::move(m));
  }
  ideal.minimal = true;
  return ideal;
}

Monomial crossing_monomial(const Multigraph& g, const ConnectedPartition& pi) {
  Monomial m = Monomial::one(g.edge_count());
  const std::vector<bool> mask = crossing_edges(g, pi);
  for (std::size_t e = 0; e < mask.size(); ++e) m.exponents[e] = mask[e] ? 1 : 0;
  return m;
}

std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal) {
  if (ideal.generators.empty()) throw std::invalid_argument("lcm-lattice of the zero ideal is undefined");
  const MonomialIdeal gens = ideal.minimal ? ideal : minimalize(ideal);
  for (const Monomial& m : gens.generators) {
    if (m.is_one()) throw std::invalid_argument("lcm-lattice of the unit ideal is undefined");
  }
  auto hash = [](const Monomial& m) { return boost::hash_range(m.exponents.begin(), m.exponents.end()); };
  std::unordered_set<Monomial, decltype(hash)> closed(gens.generators.begin(), gens.generators.end(), 0, hash);
  std::vector<Monomial> frontier(closed.begin(), closed.end());
  Monomial l;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier) {
      for (const Monomial& g : gens.generators) {
        l.exponents.resize(m.exponents.size());
        for (std::size_t i = 0; i < l.exponents.size(); ++i) l.exponents[i] = std::max(m.exponents[i], g.exponents[i]);
        if (!closed.contains(l)) {
          closed.insert(l);
          next.push_back(l);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(closed.begin(), closed.end());
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    return da != db ? da < db : a < b;
  });
  return out;
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
  const MonomialIdeal gens = ideal.minimal ? ideal : minimalize(ideal);
  LcmLattice out;
  out.elements.push_back(Monomial::one(ideal.variables.size()));
  for (Monomial& m : lcm_closure(gens)) out.elements.push_back(std::move(m));

  // Every element is the lcm of the generators dividing it, so divisibility
  // is containment of those generator sets.
  const std::size_t n = out.elements.size();
  const std::size_t k = gens.generators.size();
  if (k <= 64) {
    std::vector<std::uint64_t> below(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t g = 0; g < k; ++g) {
        if (gens.generators[g].divides(out.elements[x])) below[x] |= std::uint64_t{1} << g;
      }
    }
    out.order = FiniteLattice::from_order(n, [&](std::size_t a, std::size_t b) { return (below[a] & ~below[b]) == 0; });
  } else {
    std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(k));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t g = 0; g < k; ++g) {
        if (gens.generators[g].divides(out.elements[x])) below[x].set(g);
      }
    }
    out.order = FiniteLattice::from_order(n, [&](std::size_t a, std::size_t b) { return below[a].is_subset_of(below[b]); });
  }
  return out;
}

std::string Substitution::image_name(std::size_t i) const {
  return image.at(i) ? target.at(*image[i]) : "1";
}

std::string Substitution::image_name(const std::string& variable) const {
  auto it = std::find(source.begin(), source.end(), variable);
  if (it == source.end()) throw std::invalid_argument("unknown variable '" + variable + "'");
  return image_name(static_cast<std::size_t>(it - source.begin()));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Substitution build_substitution_A(const Multigraph& g) {
  const MonomialIdeal k = oriented_cutset_ideal(g);
  const MonomialIdeal i = parking_ideal(g);
  Substitution s{k.variables, i.variables, {}};

  // Half-edge 2e+0 sits at the tail of e, 2e+1 at its head.
  auto endpoint = [&](std::size_t h) { return h % 2 == 0 ? g.edge(h / 2).tail : g.edge(h / 2).head; };
  const std::size_t halves = 2 * g.edge_count();
  UnionFind classes(halves);
  for (std::size_t a = 0; a < halves; ++a) {
    for (std::size_t b = a + 1; b < halves; ++b) {
      if (endpoint(a) == endpoint(b)) classes.unite(a, b);
    }
  }

  std::vector<std::optional<std::size_t>> vertex_var(g.vertex_count());
  const std::vector<std::size_t> vs = g.non_sink_vertices();
  for (std::size_t idx = 0; idx < vs.size(); ++idx) vertex_var[vs[idx]] = idx;

  s.image.resize(halves);
  for (std::size_t h = 0; h < halves; ++h) s.image[h] = vertex_var[endpoint(classes.find(h))];
  return s;
}

Substitution build_substitution_B(const Multigraph& g) {
  Substitution s{oriented_cutset_ideal(g).variables, cutset_ideal(g).variables, {}};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    s.image.push_back(e);
    s.image.push_back(e);
  }
  return s;
}

Substitution identity_substitution(const std::vector<std::string>& variables) {
  Substitution s{variables, variables, {}};
  for (std::size_t i = 0; i < variables.size(); ++i) s.image.push_back(i);
  return s;
}

MonomialIdeal apply_substitution(const MonomialIdeal& ideal, const Substitution& s) {
  if (ideal.variables != s.source) throw std::invalid_argument("substitution source does not match ideal variables");
  MonomialIdeal out{s.target, {}, false};
  for (const Monomial& m : ideal.generators) {
    Monomial image = Monomial::one(s.target.size());
    for (std::size_t v = 0; v < m.exponents.size(); ++v) {
      if (s.image[v]) image.exponents[*s.image[v]] += m.exponents[v];
    }
    out.generators.push_back(std::move(image));
  }
  return minimalize(out);
}

}  // namespace parkbetti
