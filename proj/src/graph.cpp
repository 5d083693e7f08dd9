#include "parkbetti/graph.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace parkbetti {

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  return labels;
}

VertexSet reach_within(const Multigraph& g, VertexSet s, std::size_t start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](std::size_t v) { next = next | (g.neighbours(v) & s); });
    frontier = next - seen;
    seen = seen | frontier;
  }
  return seen;
}

}  // namespace

Multigraph::Multigraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges, std::size_t sink)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)), sink_(sink) {
  validate_and_index();
}

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges, std::size_t sink)
    : Multigraph(default_labels(n), std::move(edges), sink) {}

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges)
    : Multigraph(default_labels(n), std::move(edges), n == 0 ? 0 : n - 1) {}

void Multigraph::validate_and_index() {
  const std::size_t n = labels_.size();
  if (n == 0) throw GraphError("graph has no vertices");
  if (n > kMaxVertices) {
    throw GraphError("graph has " + std::to_string(n) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  if (sink_ >= n) throw GraphError("sink index out of range");

  degree_.assign(n, 0);
  adjacency_.assign(n, std::vector<std::size_t>(n, 0));
  neighbours_.assign(n, VertexSet{});
  std::set<std::string> seen_labels;
  for (const Edge& e : edges_) {
    if (!seen_labels.insert(e.label).second) throw GraphError("duplicate edge label '" + e.label + "'");
    if (e.tail >= n || e.head >= n) throw GraphError("edge '" + e.label + "' has an endpoint out of range");
    if (e.tail == e.head) throw GraphError("edge '" + e.label + "' is a loop");
    ++degree_[e.tail];
    ++degree_[e.head];
    ++adjacency_[e.tail][e.head];
    ++adjacency_[e.head][e.tail];
    neighbours_[e.tail].insert(e.head);
    neighbours_[e.head].insert(e.tail);
  }
  if (reach_within(*this, all_vertices(), 0) != all_vertices()) throw GraphError("graph is not connected");
}

Multigraph Multigraph::with_sink(std::size_t sink) const {
  return Multigraph(labels_, edges_, sink);
}

std::vector<std::size_t> Multigraph::non_sink_vertices() const {
  std::vector<std::size_t> out;
  out.reserve(vertex_count() - 1);
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (v != sink_) out.push_back(v);
  }
  return out;
}

ConnectedPartition::ConnectedPartition(const Multigraph& g, std::vector<VertexSet> blocks)
    : blocks_(std::move(blocks)) {
  VertexSet covered;
  for (VertexSet b : blocks_) {
    if (b.empty()) throw GraphError("partition has an empty block");
    if (!(covered & b).empty()) throw GraphError("partition blocks overlap");
    if (!is_connected_induced(g, b)) throw GraphError("partition block is not connected");
    covered = covered | b;
  }
  if (covered != g.all_vertices()) throw GraphError("partition does not cover every vertex");
  std::sort(blocks_.begin(), blocks_.end(), [](VertexSet a, VertexSet b) { return a.first() < b.first(); });
  block_of_.assign(g.vertex_count(), 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    blocks_[i].for_each([&](std::size_t v) { block_of_[v] = i; });
  }
}

ConnectedPartition ConnectedPartition::discrete(const Multigraph& g) {
  std::vector<VertexSet> blocks;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) blocks.push_back(VertexSet::single(v));
  return ConnectedPartition(g, std::move(blocks));
}

ConnectedPartition ConnectedPartition::whole(const Multigraph& g) {
  return ConnectedPartition(g, {g.all_vertices()});
}

bool ConnectedPartition::refines(const ConnectedPartition& coarser) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](VertexSet b) {
    return b.subset_of(coarser.blocks_[coarser.block_of(b.first())]);
  });
}

std::string ConnectedPartition::to_string(const Multigraph& g) const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += "{";
    bool first = true;
    blocks_[i].for_each([&](std::size_t v) {
      if (!first) out += ",";
      out += g.vertex_label(v);
      first = false;
    });
    out += "}";
  }
  return out + "}";
}

bool is_connected_induced(const Multigraph& g, VertexSet s) {
  if (s.empty()) throw GraphError("connectivity of an empty vertex subset is undefined");
  return reach_within(g, s, s.first()) == s;
}

std::vector<Cut> enumerate_connected_cuts(const Multigraph& g) {
  std::vector<Cut> cuts;
  const VertexSet all = g.all_vertices();
  const VertexSet candidates = all - VertexSet::single(g.sink());
  const std::uint32_t mask = candidates.bits();
  // Non-empty sub-masks of the non-sink vertices in increasing integer order.
  for (std::uint32_t bits = mask & (~mask + 1); bits != 0; bits = ((bits | ~mask) + 1) & mask) {
    VertexSet u(bits);
    VertexSet w = all - u;
    if (is_connected_induced(g, u) && is_connected_induced(g, w)) cuts.push_back({u, w});
  }
  return cuts;
}

std::size_t boundary_degree(const Multigraph& g, VertexSet u, std::size_t v) {
  if (!u.contains(v)) return 0;
  std::size_t d = 0;
  (g.all_vertices() - u).for_each([&](std::size_t w) { d += g.multiplicity(v, w); });
  return d;
}

std::vector<std::size_t> cut_set(const Multigraph& g, const Cut& c) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (c.source_side.contains(edge.tail) != c.source_side.contains(edge.head)) out.push_back(e);
  }
  return out;
}

Multigraph contract(const Multigraph& g, const ConnectedPartition& pi) {
  VertexSet covered;
  for (VertexSet b : pi.blocks()) covered = covered | b;
  if (covered != g.all_vertices()) throw GraphError("partition does not match the graph's vertex set");
  std::vector<std::string> labels;
  for (VertexSet b : pi.blocks()) {
    std::string label;
    b.for_each([&](std::size_t v) { label += g.vertex_label(v); });
    labels.push_back(std::move(label));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    std::size_t a = pi.block_of(e.tail);
    std::size_t b = pi.block_of(e.head);
    if (a != b) edges.push_back({e.label, a, b});
  }
  return Multigraph(std::move(labels), std::move(edges), pi.block_of(g.sink()));
}

std::uint64_t spanning_tree_count(const Multigraph& g) {
  using boost::multiprecision::cpp_int;
  const std::vector<std::size_t> keep = g.non_sink_vertices();
  const std::size_t m = keep.size();
  if (m == 0) return 1;
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a[i][j] = i == j ? cpp_int(g.degree(keep[i])) : -cpp_int(g.multiplicity(keep[i], keep[j]));
    }
  }
  // Bareiss fraction-free elimination; every division is exact.
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < m && a[p][k] == 0) ++p;
      if (p == m) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  cpp_int det = a[m - 1][m - 1] * sign;
  if (det < 0 || det > cpp_int(std::numeric_limits<std::uint64_t>::max())) {
    throw GraphError("spanning tree count out of range");
  }
  return det.convert_to<std::uint64_t>();
}

}  // namespace parkbetti
