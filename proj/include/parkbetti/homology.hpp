#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "parkbetti/graph.hpp"
#include "parkbetti/ideal.hpp"
#include "parkbetti/lattice.hpp"

namespace parkbetti {

/// Coefficient field: GF(p) for a prime p, or the rationals for 0.
struct Field {
  std::uint32_t characteristic = 32003;

  static constexpr Field rationals() { return {0}; }
  std::string name() const;
  bool operator==(const Field&) const = default;
};

/// The two characteristics every homology check runs over.
inline constexpr std::array<Field, 2> kDefaultFields{Field{32003}, Field{2}};

/// Sparse integer matrix stored by columns as (row, coefficient) pairs.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;
};

/// Rank over the given field. Entries are reduced mod p first.
std::size_t matrix_rank(const SparseMatrix& m, Field field);

/// Augmented simplicial chain complex with integer boundary maps.
/// boundaries[d + 1] maps d-chains to (d - 1)-chains, so boundaries[0] is the
/// zero map out of the empty face and boundaries[1] is the augmentation.
struct ChainComplexMatrices {
  std::vector<std::size_t> face_counts;  // face_counts[d + 1]
  std::vector<SparseMatrix> boundaries;

  /// Checks that every composite of consecutive boundary maps is zero over
  /// the integers.
  bool squares_to_zero() const;
};

ChainComplexMatrices chain_complex(const SimplicialComplex& complex);
/// Throws std::logic_error if some face is missing one of its facets.
ChainComplexMatrices chain_complex(const FaceLevels& faces);

/// Reduced homology dimensions, dims[d + 1] for d = -1, 0, 1, ...
struct HomologyDims {
  std::vector<std::size_t> dims;

  std::size_t at(int d) const;
  /// Alternating sum, which equals the reduced Euler characteristic.
  std::int64_t euler_characteristic() const;
  /// Degrees with nonzero homology.
  std::vector<int> support() const;
};

/// Throws std::logic_error if the assembled boundary maps do not square to zero.
HomologyDims reduced_homology_dims(const SimplicialComplex& complex, Field field);
HomologyDims reduced_homology_dims(const FaceLevels& faces, Field field);
/// Bitmask faces; every face must have all its facets listed.
HomologyDims reduced_homology_dims(const FaceMasks& faces, Field field);

/// Reduced homology of the open interval (bottom, y) of a lattice, computed
/// on its crosscut complex.
HomologyDims interval_homology(const FiniteLattice& l, std::size_t y, Field field);

/// Coarse Betti numbers of the quotient ring: entry i - 1 holds beta_i,
/// trailing zeros dropped.
using BettiVector = std::vector<std::uint64_t>;

std::string format_betti(const BettiVector& b);

/// Sum over connected partitions with i + 1 parts of mpf of the contraction.
BettiVector betti_wilmes(const Multigraph& g);

/// One row of the lcm-lattice homology audit.
struct GpwRow {
  std::size_t element = 0;
  std::size_t rank = 0;  // 0 when the lcm-lattice is not graded
  bool graded = false;
  std::int64_t mobius = 0;
  HomologyDims homology;
};

/// Reduced homology of every open interval (1, m) of the lcm-lattice, via
/// interval_homology.
std::vector<GpwRow> gpw_breakdown(const LcmLattice& lattice, Field field);

/// beta_i = sum over m != 1 in the lcm-lattice of dim H~_{i-2}((1, m)).
BettiVector betti_gpw(const MonomialIdeal& ideal, Field field);
BettiVector betti_gpw(const std::vector<GpwRow>& rows);

/// Upper Koszul simplicial complex at multidegree b: squarefree F within the
/// support of b with x^{b - F} in the ideal. Vertices are variable indices.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b);

/// Multigraded Betti numbers from upper Koszul complexes over all lcms of
/// generators, summed and shifted to quotient-ring indexing.
BettiVector betti_koszul(const MonomialIdeal& ideal, Field field);

/// beta_i = sum of |mu(0, y)| over rank-i elements. Only meaningful for
/// geometric lattices. Throws LatticeError on a non-graded lattice.
BettiVector betti_mobius(const FiniteLattice& lattice, const MobiusTable& mu);

}  // namespace parkbetti
