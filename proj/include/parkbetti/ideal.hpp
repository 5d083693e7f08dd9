#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parkbetti/graph.hpp"
#include "parkbetti/lattice.hpp"

namespace parkbetti {

/// Exponent vector over the variable list of the owning ideal.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  static Monomial one(std::size_t nvars) { return {std::vector<std::uint32_t>(nvars, 0)}; }

  bool divides(const Monomial& other) const;
  bool is_one() const;
  bool is_squarefree() const;
  std::uint64_t degree() const;
  /// Variable indices with a nonzero exponent.
  std::vector<std::size_t> support() const;

  auto operator<=>(const Monomial&) const = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Monomial ideal over a named variable list.
///
/// Variable names follow one convention across the project: `x<i>` for the
/// non-sink vertex v_i, `y_<label>` for an edge, and `z1_<label>` /
/// `z2_<label>` for the two oriented half-edges of an edge.
struct MonomialIdeal {
  std::vector<std::string> variables;
  std::vector<Monomial> generators;
  bool minimal = false;

  /// `x1^3*x2`, `y_a*y_b`, or `1`.
  std::string format(const Monomial& m) const;
  /// Generators one per line.
  std::string format() const;
  /// JSON list of exponent maps, e.g. [{"x1":3},{"x1":1,"x3":1}].
  std::string to_json() const;
};

/// Drops duplicate generators and generators divisible by another one;
/// keeps first-occurrence order.
MonomialIdeal minimalize(const MonomialIdeal& ideal);

/// Same variable list and the same generator set, ignoring order.
bool same_generators(const MonomialIdeal& a, const MonomialIdeal& b);

/// Generators x^C, one per connected cut, in cut order.
MonomialIdeal parking_ideal(const Multigraph& g);
/// Squarefree generators y^F, one per connected cut-set.
MonomialIdeal cutset_ideal(const Multigraph& g);
/// Squarefree generators z^C; z1_e when the edge leaves U at its tail,
/// z2_e when it leaves at its head.
MonomialIdeal oriented_cutset_ideal(const Multigraph& g);

/// y^{F(pi)} over the variables of cutset_ideal(g).
Monomial crossing_monomial(const Multigraph& g, const ConnectedPartition& pi);

using LcmLattice = LabeledLattice<Monomial>;

/// Lcms of all nonempty sets of minimal generators, sorted by degree, then
/// exponent vector. Throws std::invalid_argument on the zero or unit ideal.
std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal);

/// lcm_closure with 1 adjoined as bottom, ordered by divisibility.
LcmLattice lcm_lattice(const MonomialIdeal& ideal);

/// Variable identification: each source variable maps to a target variable
/// or to the constant 1.
struct Substitution {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<std::optional<std::size_t>> image;

  /// Name of the image of source variable i ("1" for the constant).
  std::string image_name(std::size_t i) const;
  /// Image of the named source variable.
  std::string image_name(const std::string& variable) const;
};

/// Identifies oriented half-edge variables meeting at the same vertex; the
/// class at a non-sink vertex v_i becomes x<i>, the class at the sink
/// becomes 1. Targets the variables of parking_ideal(g).
Substitution build_substitution_A(const Multigraph& g);
/// Identifies z1_e with z2_e as y_e. Targets the variables of cutset_ideal(g).
Substitution build_substitution_B(const Multigraph& g);
Substitution identity_substitution(const std::vector<std::string>& variables);

/// Renames variables, multiplies exponents together, then minimalizes.
/// Throws std::invalid_argument if the ideal's variables differ from the
/// substitution's source list.
MonomialIdeal apply_substitution(const MonomialIdeal& ideal, const Substitution& s);

}  // namespace parkbetti
