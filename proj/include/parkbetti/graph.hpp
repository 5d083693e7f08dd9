#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parkbetti {

/// Hard cap on vertex count; vertex subsets live in one machine word.
inline constexpr std::size_t kMaxVertices = 32;

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bitset over vertex indices 0..n-1.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexSet single(std::size_t v) { return VertexSet(std::uint32_t{1} << v); }
  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1u; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  /// Lowest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(__builtin_ctz(bits_)); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr void insert(std::size_t v) { bits_ |= std::uint32_t{1} << v; }
  constexpr void erase(std::size_t v) { bits_ &= ~(std::uint32_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<std::size_t>(__builtin_ctz(b)));
    }
  }

  std::vector<std::size_t> members() const;

  constexpr auto operator<=>(const VertexSet&) const = default;

private:
  std::uint32_t bits_ = 0;
};

/// An edge with an ordered endpoint pair (tail, head); the order is the
/// orientation used by the oriented cut-set ideal.
struct Edge {
  std::string label;
  std::size_t tail = 0;
  std::size_t head = 0;

  bool operator==(const Edge&) const = default;
};

/// Connected loopless multigraph with a distinguished sink.
///
/// Vertices are indexed 0..n-1 internally; labels default to "v1".."vn".
/// Construction validates connectivity, loops and the vertex cap and throws
/// GraphError on violation.
class Multigraph {
public:
  Multigraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges, std::size_t sink);
  Multigraph(std::size_t n, std::vector<Edge> edges, std::size_t sink);
  /// Sink defaults to the last vertex.
  Multigraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::string& vertex_label(std::size_t v) const { return labels_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::size_t sink() const { return sink_; }
  VertexSet all_vertices() const { return VertexSet::range(vertex_count()); }

  /// Same graph with a different sink.
  Multigraph with_sink(std::size_t sink) const;

  std::size_t degree(std::size_t v) const { return degree_.at(v); }
  /// Number of parallel edges between u and v.
  std::size_t multiplicity(std::size_t u, std::size_t v) const { return adjacency_.at(u).at(v); }
  VertexSet neighbours(std::size_t v) const { return neighbours_.at(v); }

  /// Vertices other than the sink, in index order.
  std::vector<std::size_t> non_sink_vertices() const;

  bool operator==(const Multigraph& o) const {
    return labels_ == o.labels_ && edges_ == o.edges_ && sink_ == o.sink_;
  }

private:
  void validate_and_index();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::size_t sink_ = 0;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<VertexSet> neighbours_;
};

/// A cut {U, W} of the vertex set; by convention the sink lies in W.
struct Cut {
  VertexSet source_side;
  VertexSet sink_side;

  bool operator==(const Cut&) const = default;
};

/// Partition of V into blocks each inducing a connected subgraph. Blocks are
/// kept sorted by their lowest vertex, which makes the representation
/// canonical.
class ConnectedPartition {
public:
  ConnectedPartition() = default;
  /// Throws GraphError unless the blocks partition V into connected pieces.
  ConnectedPartition(const Multigraph& g, std::vector<VertexSet> blocks);

  static ConnectedPartition discrete(const Multigraph& g);
  static ConnectedPartition whole(const Multigraph& g);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  /// Index of the block holding v.
  std::size_t block_of(std::size_t v) const { return block_of_.at(v); }
  /// True when every block of this partition lies inside a block of `coarser`.
  bool refines(const ConnectedPartition& coarser) const;

  std::string to_string(const Multigraph& g) const;

  bool operator==(const ConnectedPartition& o) const { return blocks_ == o.blocks_; }
  auto operator<=>(const ConnectedPartition& o) const { return blocks_ <=> o.blocks_; }

private:
  std::vector<VertexSet> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Parses the edge-list text format:
///
///     v:<n>
///     sink:<i>          (optional, 1-based)
///     <label> <i> <j>   (1-based endpoints)
///
/// Statements are separated by newlines or ';'. '#' starts a comment.
/// Endpoints are stored with the lower index first.
Multigraph parse_graph(std::string_view text);
/// JSON mirror: {"vertices": n, "sink": i, "edges": [{"label": "a", "ends": [i, j]}, ...]}
Multigraph parse_graph_json(std::string_view text);
/// Dispatches on the first non-blank character.
Multigraph parse_graph_auto(std::string_view text);
Multigraph read_graph_file(const std::string& path);

/// Canonical text form, accepted back by parse_graph.
std::string format_graph(const Multigraph& g);
std::string format_graph_json(const Multigraph& g);

bool is_connected_induced(const Multigraph& g, VertexSet s);

/// All cuts with both sides inducing connected subgraphs, sink in W,
/// sorted by U as an integer.
std::vector<Cut> enumerate_connected_cuts(const Multigraph& g);

/// Edges from v to V \ U when v is in U, else 0.
std::size_t boundary_degree(const Multigraph& g, VertexSet u, std::size_t v);

/// Indices of edges crossing the cut, in edge order.
std::vector<std::size_t> cut_set(const Multigraph& g, const Cut& c);

/// Collapses each block to a vertex; intra-block edges are dropped and the
/// surviving edges keep their labels. The block holding the sink becomes the
/// sink.
Multigraph contract(const Multigraph& g, const ConnectedPartition& pi);

/// Number of spanning trees via an exact determinant of the reduced Laplacian.
std::uint64_t spanning_tree_count(const Multigraph& g);

}  // namespace parkbetti
