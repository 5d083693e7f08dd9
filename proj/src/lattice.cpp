#include "parkbetti/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace parkbetti {

void FiniteLattice::allocate(std::size_t n) {
  if (n == 0) throw LatticeError("a lattice needs at least one element");
  up_.assign(n, Bits(n));
  down_.assign(n, Bits(n));
}

void FiniteLattice::finish() {
  const std::size_t n = up_.size();
  std::optional<std::size_t> bot;
  std::optional<std::size_t> top;
  for (std::size_t a = 0; a < n; ++a) {
    if (up_[a].count() == n) {
      if (bot) throw LatticeError("order has more than one bottom element");
      bot = a;
    }
    if (down_[a].count() == n) {
      if (top) throw LatticeError("order has more than one top element");
      top = a;
    }
  }
  if (!bot) throw LatticeError("order has no bottom element");
  if (!top) throw LatticeError("order has no top element");
  bottom_ = *bot;
  top_ = *top;

  linear_.resize(n);
  std::iota(linear_.begin(), linear_.end(), std::size_t{0});
  std::vector<std::size_t> depth(n);
  for (std::size_t a = 0; a < n; ++a) depth[a] = down_[a].count();
  std::stable_sort(linear_.begin(), linear_.end(), [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });

  // Scanning the strict up-set of a in linear-extension order, b covers a iff
  // no earlier element of that up-set lies below b.
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  Bits dominated(n);
  for (std::size_t a = 0; a < n; ++a) {
    dominated.reset();
    for (std::size_t b : linear_) {
      if (b == a || !up_[a].test(b)) continue;
      if (!dominated.test(b)) {
        upper_covers_[a].push_back(b);
        lower_covers_[b].push_back(a);
      }
      dominated |= up_[b];
    }
  }

  std::vector<std::size_t> shortest(n, 0);
  std::vector<std::size_t> longest(n, 0);
  for (std::size_t x : linear_) {
    if (x == bottom_) continue;
    std::size_t lo = std::numeric_limits<std::size_t>::max();
    std::size_t hi = 0;
    for (std::size_t y : lower_covers_[x]) {
      lo = std::min(lo, shortest[y] + 1);
      hi = std::max(hi, longest[y] + 1);
    }
    shortest[x] = lo;
    longest[x] = hi;
  }
  graded_ = shortest == longest;
  rank_ = std::move(longest);
}

std::optional<std::size_t> FiniteLattice::join(std::size_t a, std::size_t b) const {
  Bits common = up_[a] & up_[b];
  for (std::size_t u = common.find_first(); u != Bits::npos; u = common.find_next(u)) {
    if (common.is_subset_of(up_[u])) return u;
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteLattice::meet(std::size_t a, std::size_t b) const {
  Bits common = down_[a] & down_[b];
  for (std::size_t u = common.find_first(); u != Bits::npos; u = common.find_next(u)) {
    if (common.is_subset_of(down_[u])) return u;
  }
  return std::nullopt;
}

bool FiniteLattice::is_lattice() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (!join(a, b) || !meet(a, b)) return false;
    }
  }
  return true;
}

bool FiniteLattice::is_atomic() const {
  const std::vector<std::size_t> ats = atoms();
  for (std::size_t x = 0; x < size(); ++x) {
    std::optional<std::size_t> acc = bottom_;
    for (std::size_t a : ats) {
      if (leq(a, x)) acc = join(*acc, a);
      if (!acc) return false;
    }
    if (*acc != x) return false;
  }
  return true;
}

std::size_t FiniteLattice::rank(std::size_t a) const {
  if (!graded_) throw LatticeError("rank requested on a poset that is not graded");
  return rank_[a];
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice d;
  d.up_ = down_;
  d.down_ = up_;
  d.finish();
  return d;
}

MobiusTable mobius(const FiniteLattice& l) {
  MobiusTable mu(l.size(), 0);
  for (std::size_t x : l.linear_extension()) {
    if (x == l.bottom()) {
      mu[x] = 1;
      continue;
    }
    std::int64_t sum = 0;
    const auto& below = l.down_set(x);
    for (std::size_t y = below.find_first(); y != FiniteLattice::Bits::npos; y = below.find_next(y)) {
      if (y != x) sum += mu[y];
    }
    mu[x] = -sum;
  }
  return mu;
}

std::vector<std::int64_t> mobius_residuals(const FiniteLattice& l, const MobiusTable& mu) {
  std::vector<std::int64_t> residual(l.size(), 0);
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::int64_t sum = 0;
    const auto& below = l.down_set(x);
    for (std::size_t y = below.find_first(); y != FiniteLattice::Bits::npos; y = below.find_next(y)) sum += mu[y];
    residual[x] = sum - (x == l.bottom() ? 1 : 0);
  }
  return residual;
}

namespace {

void grow_partitions(const Multigraph& g, VertexSet remaining, std::vector<VertexSet>& blocks,
                     std::vector<ConnectedPartition>& out) {
  if (remaining.empty()) {
    out.emplace_back(g, blocks);
    return;
  }
  const VertexSet anchor = VertexSet::single(remaining.first());
  const std::uint32_t rest = (remaining - anchor).bits();
  // Every connected block containing the lowest unassigned vertex.
  for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
    VertexSet block = anchor | VertexSet(sub);
    if (is_connected_induced(g, block)) {
      blocks.push_back(block);
      grow_partitions(g, remaining - block, blocks, out);
      blocks.pop_back();
    }
    if (sub == 0) break;
  }
}

}  // namespace

std::vector<ConnectedPartition> connected_partitions(const Multigraph& g) {
  std::vector<ConnectedPartition> out;
  std::vector<VertexSet> blocks;
  grow_partitions(g, g.all_vertices(), blocks, out);
  std::sort(out.begin(), out.end(), [](const ConnectedPartition& a, const ConnectedPartition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

PartitionLattice connected_partition_lattice(const Multigraph& g) {
  PartitionLattice l;
  l.elements = connected_partitions(g);
  l.order = FiniteLattice::from_order(l.elements.size(), [&](std::size_t a, std::size_t b) {
    return l.elements[a].refines(l.elements[b]);
  });
  return l;
}

ConnectedPartition dual_partition_join(const Multigraph& g, const ConnectedPartition& a, const ConnectedPartition& b) {
  std::vector<VertexSet> pieces;
  for (VertexSet x : a.blocks()) {
    for (VertexSet y : b.blocks()) {
      VertexSet rest = x & y;
      while (!rest.empty()) {
        // Connected component of the lowest vertex inside G_rest.
        VertexSet comp = VertexSet::single(rest.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
          VertexSet next;
          frontier.for_each([&](std::size_t v) { next = next | (g.neighbours(v) & rest); });
          frontier = next - comp;
          comp = comp | frontier;
        }
        pieces.push_back(comp);
        rest = rest - comp;
      }
    }
  }
  return ConnectedPartition(g, std::move(pieces));
}

std::vector<bool> crossing_edges(const Multigraph& g, const ConnectedPartition& pi) {
  std::vector<bool> mask(g.edge_count(), false);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    mask[e] = pi.block_of(g.edge(e).tail) != pi.block_of(g.edge(e).head);
  }
  return mask;
}

SimplicialComplex::SimplicialComplex(std::vector<std::vector<std::size_t>> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto& f : facets) {
    bool contained = std::any_of(facets_.begin(), facets_.end(), [&](const auto& kept) {
      return std::includes(kept.begin(), kept.end(), f.begin(), f.end());
    });
    if (!contained) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

FaceLevels SimplicialComplex::faces() const {
  const int dim = dimension();
  std::vector<std::set<std::vector<std::size_t>>> by_size(static_cast<std::size_t>(dim + 2));
  for (const auto& f : facets_) {
    const std::size_t k = f.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1u) face.push_back(f[i]);
      }
      by_size[face.size()].insert(std::move(face));
    }
  }
  std::vector<std::vector<std::vector<std::size_t>>> out;
  out.reserve(by_size.size());
  for (auto& s : by_size) out.emplace_back(s.begin(), s.end());
  return out;
}

SimplicialComplex order_complex(const FiniteLattice& l, std::size_t y) {
  if (y == l.bottom()) throw LatticeError("order complex of (0, 0) is undefined");
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t x) {
    chain.push_back(x);
    bool extended = false;
    for (std::size_t c : l.upper_covers(x)) {
      if (l.less(c, y)) {
        extend(c);
        extended = true;
      }
    }
    if (!extended) chains.push_back(chain);
    chain.pop_back();
  };
  for (std::size_t a : l.atoms()) {
    if (l.less(a, y)) extend(a);
  }
  if (chains.empty()) chains.emplace_back();
  return SimplicialComplex(std::move(chains));
}

Crosscut crosscut(const FiniteLattice& l, std::size_t y) {
  if (y == l.bottom()) throw LatticeError("crosscut complex of (0, 0) is undefined");
  std::vector<std::size_t> atoms;
  for (std::size_t a : l.atoms()) {
    if (l.leq(a, y)) atoms.push_back(a);
  }
  const std::vector<std::size_t>& coatoms = l.lower_covers(y);
  const bool use_atoms = atoms.size() <= coatoms.size();
  Crosscut out;
  out.vertices = use_atoms ? atoms : coatoms;
  std::sort(out.vertices.begin(), out.vertices.end());
  if (out.vertices.size() > 64) throw LatticeError("crosscut complex with more than 64 vertices");

  // A vertex set is a face iff some element of the open interval lies above
  // all of them (atoms) or below all of them (coatoms).
  FiniteLattice::Bits open_interval = l.down_set(y) & l.up_set(l.bottom());
  open_interval.reset(y);
  open_interval.reset(l.bottom());

  out.faces.resize(1);
  std::vector<FiniteLattice::Bits> common(out.vertices.size() + 1, open_interval);
  auto grow = [&](auto&& self, std::size_t from, std::uint64_t face, std::size_t size) -> void {
    if (out.faces.size() <= size) out.faces.resize(size + 1);
    out.faces[size].push_back(face);
    for (std::size_t i = from; i < out.vertices.size(); ++i) {
      const std::size_t v = out.vertices[i];
      FiniteLattice::Bits& next = common[size + 1];
      next = common[size];
      next &= use_atoms ? l.up_set(v) : l.down_set(v);
      if (next.none()) continue;
      self(self, i + 1, face | (std::uint64_t{1} << i), size + 1);
    }
  };
  grow(grow, 0, 0, 0);
  for (auto& level : out.faces) std::sort(level.begin(), level.end());
  return out;
}

FaceLevels crosscut_faces(const FiniteLattice& l, std::size_t y) {
  const Crosscut c = crosscut(l, y);
  FaceLevels levels;
  for (const auto& masks : c.faces) {
    auto& level = levels.emplace_back();
    for (std::uint64_t mask : masks) {
      auto& face = level.emplace_back();
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if ((mask >> i) & 1u) face.push_back(c.vertices[i]);
      }
    }
    std::sort(level.begin(), level.end());
  }
  return levels;
}

const char* to_string(IsomorphismCheck c) {
  switch (c) {
    case IsomorphismCheck::isomorphism: return "isomorphism";
    case IsomorphismCheck::not_bijective: return "not bijective";
    case IsomorphismCheck::order_violation: return "order violation";
  }
  return "unknown";
}

IsomorphismCheck lattice_isomorphism(const FiniteLattice& from, const FiniteLattice& to,
                                     const std::vector<std::size_t>& map) {
  if (from.size() != to.size() || map.size() != from.size()) return IsomorphismCheck::not_bijective;
  std::vector<bool> hit(to.size(), false);
  for (std::size_t image : map) {
    if (image >= to.size() || hit[image]) return IsomorphismCheck::not_bijective;
    hit[image] = true;
  }
  for (std::size_t a = 0; a < from.size(); ++a) {
    for (std::size_t b = 0; b < from.size(); ++b) {
      if (from.leq(a, b) != to.leq(map[a], map[b])) return IsomorphismCheck::order_violation;
    }
  }
  return IsomorphismCheck::isomorphism;
}

}  // namespace parkbetti
