#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "parkbetti/graph.hpp"

namespace parkbetti {

class LatticeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite bounded poset on element indices 0..size()-1, stored as cover
/// lists plus a cached reachability matrix. Lattice-ness is not assumed by
/// the constructor; query is_lattice() when it matters.
class FiniteLattice {
public:
  using Bits = boost::dynamic_bitset<>;

  FiniteLattice() = default;
  /// Builds the order from a reflexive, antisymmetric, transitive predicate.
  /// Throws LatticeError if there is no unique bottom or top.
  template <class Leq>
  static FiniteLattice from_order(std::size_t n, const Leq& leq) {
    FiniteLattice l;
    l.allocate(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || leq(a, b)) {
          l.up_[a].set(b);
          l.down_[b].set(a);
        }
      }
    }
    l.finish();
    return l;
  }

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  /// Elements b with a <= b.
  const Bits& up_set(std::size_t a) const { return up_[a]; }
  /// Elements b with b <= a.
  const Bits& down_set(std::size_t a) const { return down_[a]; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_covers_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_covers_[a]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  /// Least upper bound, if one exists.
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  bool is_lattice() const;

  /// Elements covering the bottom.
  std::vector<std::size_t> atoms() const { return upper_covers_[bottom_]; }
  /// True when every element is the join of the atoms below it.
  bool is_atomic() const;

  bool graded() const { return graded_; }
  /// Length of any maximal chain from the bottom. Throws LatticeError when
  /// the poset is not graded.
  std::size_t rank(std::size_t a) const;
  std::size_t height() const { return rank(top_); }

  /// Element order in which every element follows all elements below it.
  const std::vector<std::size_t>& linear_extension() const { return linear_; }

  /// Same elements, reversed order.
  FiniteLattice dual() const;

  bool operator==(const FiniteLattice& o) const { return up_ == o.up_; }

private:
  /// Throws LatticeError for n == 0.
  void allocate(std::size_t n);
  void finish();

  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<std::size_t> linear_;
  std::vector<std::size_t> rank_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  bool graded_ = false;
};

/// A lattice whose indices carry values of type T.
template <class T>
struct LabeledLattice {
  std::vector<T> elements;
  FiniteLattice order;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const T& value) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] == value) return i;
    }
    return std::nullopt;
  }
};

template <class T>
LabeledLattice<T> dualize(const LabeledLattice<T>& l) {
  return {l.elements, l.order.dual()};
}

/// mu(bottom, x) for every element index x.
using MobiusTable = std::vector<std::int64_t>;

/// Defining recursion: mu(0,0) = 1 and the sum of mu(0,y) over y <= x is 0
/// for x above the bottom.
MobiusTable mobius(const FiniteLattice& l);

/// Residual sum_{y <= x} mu(0,y) - [x == 0] for each x; all zero for a
/// correct table.
std::vector<std::int64_t> mobius_residuals(const FiniteLattice& l, const MobiusTable& mu);

using PartitionLattice = LabeledLattice<ConnectedPartition>;

/// All connected partitions of g, sorted by part count then by blocks.
std::vector<ConnectedPartition> connected_partitions(const Multigraph& g);

/// Connected partitions ordered by refinement: the discrete partition is the
/// bottom and {V} the top.
PartitionLattice connected_partition_lattice(const Multigraph& g);

/// Join in the dual lattice (meet under refinement): intersect blocks, then
/// split every piece into the connected components of its induced subgraph.
ConnectedPartition dual_partition_join(const Multigraph& g, const ConnectedPartition& a, const ConnectedPartition& b);

/// Edges whose endpoints lie in different blocks, as a 0/1 mask over g's
/// edge indices.
std::vector<bool> crossing_edges(const Multigraph& g, const ConnectedPartition& pi);

/// Faces of a simplicial complex grouped by size: levels[k] holds the
/// (k - 1)-dimensional faces in lexicographic order, levels[0] the empty face.
using FaceLevels = std::vector<std::vector<std::vector<std::size_t>>>;

/// Faces over at most 64 vertices as bitmasks: levels[k] holds the faces
/// with k vertices in increasing order.
using FaceMasks = std::vector<std::vector<std::uint64_t>>;

/// Simplicial complex given by its facets (sorted vertex-id lists). The
/// complex {empty face} has a single empty facet; the void complex has none.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  /// Drops duplicates and facets contained in other facets.
  explicit SimplicialComplex(std::vector<std::vector<std::size_t>> facets);

  const std::vector<std::vector<std::size_t>>& facets() const { return facets_; }
  /// Dimension of the largest face; -1 for {empty face}.
  int dimension() const;
  /// faces()[d + 1] lists the d-dimensional faces in lexicographic order,
  /// starting with the empty face at index 0.
  FaceLevels faces() const;

private:
  std::vector<std::vector<std::size_t>> facets_;
};

/// Order complex of the open interval (bottom, y): vertices are the element
/// indices strictly between, faces are chains. Throws LatticeError when y is
/// the bottom.
SimplicialComplex order_complex(const FiniteLattice& l, std::size_t y);

/// Crosscut complex of the open interval (bottom, y), homotopy equivalent to
/// order_complex(l, y) when l is a lattice and usually far smaller. Built on
/// whichever side of [bottom, y] is smaller: sets of atoms whose join is
/// strictly below y, or sets of coatoms whose meet is strictly above the
/// bottom. Bit i of a face stands for element vertices[i].
struct Crosscut {
  std::vector<std::size_t> vertices;
  FaceMasks faces;
};

/// Throws LatticeError when y is the bottom or the smaller side has more than
/// 64 elements.
Crosscut crosscut(const FiniteLattice& l, std::size_t y);

/// crosscut(l, y) with faces spelled out as element indices.
FaceLevels crosscut_faces(const FiniteLattice& l, std::size_t y);

enum class IsomorphismCheck {
  isomorphism,
  not_bijective,
  order_violation,
};

const char* to_string(IsomorphismCheck c);

/// Checks that `map` (indices of `from` to indices of `to`) is a bijection
/// that preserves and reflects the order.
IsomorphismCheck lattice_isomorphism(const FiniteLattice& from, const FiniteLattice& to,
                                     const std::vector<std::size_t>& map);

/// JSON document with the elements, cover pairs and (when given) mu values
/// of a connected partition lattice.
std::string partition_lattice_json(const Multigraph& g, const PartitionLattice& l, const MobiusTable* mu);
/// Graphviz Hasse diagram of a connected partition lattice.
std::string partition_lattice_dot(const Multigraph& g, const PartitionLattice& l, const MobiusTable* mu);

}  // namespace parkbetti
