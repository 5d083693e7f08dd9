#include "parkbetti/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "parkbetti/chipfiring.hpp"

namespace parkbetti {

std::string Field::name() const {
  return characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

// Column reduction keyed on the largest row index of each column; the rank is
// the number of columns left nonzero. Boundary matrices stay sparse under it.
template <class Scalar, class Ops>
std::size_t rank_by_column_reduction(const SparseMatrix& m, const Ops& ops) {
  using Column = std::vector<std::pair<std::size_t, Scalar>>;
  std::vector<Column> reduced;
  std::vector<std::ptrdiff_t> pivot_of(m.rows, -1);
  for (const auto& source : m.columns) {
    Column col;
    for (auto [r, v] : source) {
      Scalar x = ops.from_int(v);
      if (!ops.is_zero(x)) col.emplace_back(r, std::move(x));
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!col.empty() && pivot_of[col.back().first] >= 0) {
      const Column& piv = reduced[static_cast<std::size_t>(pivot_of[col.back().first])];
      const Scalar factor = ops.div(col.back().second, piv.back().second);
      Column merged;
      merged.reserve(col.size() + piv.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          merged.push_back(std::move(col[i++]));
        } else if (i == col.size() || piv[j].first < col[i].first) {
          merged.emplace_back(piv[j].first, ops.neg_mul(factor, piv[j].second));
          ++j;
        } else {
          Scalar x = ops.sub_mul(col[i].second, factor, piv[j].second);
          if (!ops.is_zero(x)) merged.emplace_back(col[i].first, std::move(x));
          ++i;
          ++j;
        }
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      pivot_of[col.back().first] = static_cast<std::ptrdiff_t>(reduced.size());
      reduced.push_back(std::move(col));
    }
  }
  return reduced.size();
}

struct ModPOps {
  std::uint64_t p;
  std::uint64_t from_int(std::int64_t v) const {
    const auto q = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((v % q) + q) % q);
  }
  bool is_zero(std::uint64_t x) const { return x == 0; }
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return a * pow_mod(b, p - 2, p) % p; }
  std::uint64_t neg_mul(std::uint64_t f, std::uint64_t b) const { return (p - f * b % p) % p; }
  std::uint64_t sub_mul(std::uint64_t a, std::uint64_t f, std::uint64_t b) const { return (a + p - f * b % p) % p; }
};

struct RationalOps {
  using Q = boost::multiprecision::cpp_rational;
  Q from_int(std::int64_t v) const { return Q(v); }
  bool is_zero(const Q& x) const { return x == 0; }
  Q div(const Q& a, const Q& b) const { return a / b; }
  Q neg_mul(const Q& f, const Q& b) const { return -(f * b); }
  Q sub_mul(const Q& a, const Q& f, const Q& b) const { return a - f * b; }
};

}  // namespace

std::size_t matrix_rank(const SparseMatrix& m, Field field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.characteristic == 0) return rank_by_column_reduction<RationalOps::Q>(m, RationalOps{});
  return rank_by_column_reduction<std::uint64_t>(m, ModPOps{field.characteristic});
}

bool ChainComplexMatrices::squares_to_zero() const {
  for (std::size_t k = 1; k + 1 < boundaries.size(); ++k) {
    const SparseMatrix& lower = boundaries[k];
    const SparseMatrix& upper = boundaries[k + 1];
    std::vector<std::int64_t> acc(lower.rows, 0);
    std::vector<std::size_t> touched;
    for (const auto& column : upper.columns) {
      for (auto [mid, a] : column) {
        for (auto [r, b] : lower.columns[mid]) {
          if (acc[r] == 0) touched.push_back(r);
          acc[r] += a * b;
        }
      }
      for (std::size_t r : touched) {
        if (acc[r] != 0) return false;
      }
      touched.clear();
    }
  }
  return true;
}

ChainComplexMatrices chain_complex(const SimplicialComplex& complex) { return chain_complex(complex.faces()); }

ChainComplexMatrices chain_complex(const FaceLevels& faces) {
  ChainComplexMatrices cc;
  for (const auto& level : faces) cc.face_counts.push_back(level.size());

  // boundaries[0]: C_{-1} -> 0.
  cc.boundaries.push_back(SparseMatrix{0, cc.face_counts.empty() ? 0 : cc.face_counts[0], {}});
  if (!cc.face_counts.empty()) cc.boundaries[0].columns.resize(cc.face_counts[0]);

  for (std::size_t k = 1; k < faces.size(); ++k) {
    const auto& lower = faces[k - 1];
    SparseMatrix m{faces[k - 1].size(), faces[k].size(), {}};
    m.columns.resize(faces[k].size());
    for (std::size_t c = 0; c < faces[k].size(); ++c) {
      const auto& face = faces[k][c];
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        std::vector<std::size_t> facet;
        facet.reserve(face.size() - 1);
        for (std::size_t i = 0; i < face.size(); ++i) {
          if (i != drop) facet.push_back(face[i]);
        }
        auto it = std::lower_bound(lower.begin(), lower.end(), facet);
        if (it == lower.end() || *it != facet) throw std::logic_error("face list is not closed under taking subsets");
        m.columns[c].emplace_back(static_cast<std::size_t>(it - lower.begin()), drop % 2 == 0 ? 1 : -1);
      }
    }
    cc.boundaries.push_back(std::move(m));
  }
  return cc;
}

std::size_t HomologyDims::at(int d) const {
  const auto idx = static_cast<std::size_t>(d + 1);
  return d >= -1 && idx < dims.size() ? dims[idx] : 0;
}

std::int64_t HomologyDims::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const auto v = static_cast<std::int64_t>(dims[i]);
    // Index i holds degree i - 1.
    chi += (i % 2 == 1) ? v : -v;
  }
  return chi;
}

std::vector<int> HomologyDims::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] != 0) out.push_back(static_cast<int>(i) - 1);
  }
  return out;
}

HomologyDims reduced_homology_dims(const SimplicialComplex& complex, Field field) {
  return reduced_homology_dims(complex.faces(), field);
}

HomologyDims interval_homology(const FiniteLattice& l, std::size_t y, Field field) {
  return reduced_homology_dims(crosscut(l, y).faces, field);
}

namespace {

// Boundary map out of the faces with k vertices: column c lists, for each
// vertex of face c in increasing order, the row of the facet without it.
struct MaskBoundary {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t per_column = 0;
  std::vector<std::uint32_t> row;

  int sign(std::size_t i) const { return i % 2 == 0 ? 1 : -1; }
};

MaskBoundary mask_boundary(const std::vector<std::uint64_t>& lower, const std::vector<std::uint64_t>& upper,
                           std::size_t k) {
  MaskBoundary b{lower.size(), upper.size(), k, {}};
  b.row.reserve(upper.size() * k);
  for (std::uint64_t face : upper) {
    for (std::uint64_t rest = face; rest; rest &= rest - 1) {
      const std::uint64_t facet = face & ~(rest & -rest);
      auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      if (it == lower.end() || *it != facet) throw std::logic_error("face list is not closed under taking subsets");
      b.row.push_back(static_cast<std::uint32_t>(it - lower.begin()));
    }
  }
  return b;
}

bool composes_to_zero(const MaskBoundary& lower, const MaskBoundary& upper) {
  std::vector<std::int64_t> acc(lower.rows, 0);
  for (std::size_t c = 0; c < upper.cols; ++c) {
    for (std::size_t i = 0; i < upper.per_column; ++i) {
      const std::size_t mid = upper.row[c * upper.per_column + i];
      for (std::size_t j = 0; j < lower.per_column; ++j) {
        acc[lower.row[mid * lower.per_column + j]] += upper.sign(i) * lower.sign(j);
      }
    }
    for (std::size_t i = 0; i < upper.per_column; ++i) {
      const std::size_t mid = upper.row[c * upper.per_column + i];
      for (std::size_t j = 0; j < lower.per_column; ++j) {
        std::int64_t& v = acc[lower.row[mid * lower.per_column + j]];
        if (v != 0) return false;
      }
    }
  }
  return true;
}

std::size_t dense_rank_mod_p(const MaskBoundary& b, std::uint64_t p) {
  // Rows of the working matrix are the columns of b.
  std::vector<std::uint32_t> a(b.cols * b.rows, 0);
  for (std::size_t c = 0; c < b.cols; ++c) {
    for (std::size_t i = 0; i < b.per_column; ++i) {
      a[c * b.rows + b.row[c * b.per_column + i]] = static_cast<std::uint32_t>(b.sign(i) > 0 ? 1 : p - 1);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < b.rows && rank < b.cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < b.cols && a[pivot * b.rows + col] == 0) ++pivot;
    if (pivot == b.cols) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * b.rows),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * b.rows),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * b.rows));
    }
    std::uint32_t* prow = &a[rank * b.rows];
    const std::uint64_t inv = pow_mod(prow[col], p - 2, p);
    for (std::size_t j = col; j < b.rows; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    for (std::size_t r = rank + 1; r < b.cols; ++r) {
      std::uint32_t* row = &a[r * b.rows];
      const std::uint64_t f = row[col];
      if (f == 0) continue;
      for (std::size_t j = col; j < b.rows; ++j) {
        if (prow[j]) row[j] = static_cast<std::uint32_t>((row[j] + (p - f) * prow[j]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t mask_boundary_rank(const MaskBoundary& b, Field field) {
  if (b.rows == 0 || b.cols == 0) return 0;
  constexpr std::size_t kDenseLimit = std::size_t{1} << 12;
  if (field.characteristic != 0 && b.rows * b.cols <= kDenseLimit) return dense_rank_mod_p(b, field.characteristic);
  SparseMatrix m{b.rows, b.cols, {}};
  m.columns.resize(b.cols);
  for (std::size_t c = 0; c < b.cols; ++c) {
    for (std::size_t i = 0; i < b.per_column; ++i) m.columns[c].emplace_back(b.row[c * b.per_column + i], b.sign(i));
  }
  return matrix_rank(m, field);
}

}  // namespace

HomologyDims reduced_homology_dims(const FaceMasks& faces, Field field) {
  std::vector<MaskBoundary> boundaries(faces.size());
  for (std::size_t k = 1; k < faces.size(); ++k) boundaries[k] = mask_boundary(faces[k - 1], faces[k], k);
  for (std::size_t k = 2; k < faces.size(); ++k) {
    if (!composes_to_zero(boundaries[k - 1], boundaries[k])) {
      throw std::logic_error("boundary maps do not compose to zero");
    }
  }
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  for (std::size_t k = 1; k < faces.size(); ++k) ranks[k] = mask_boundary_rank(boundaries[k], field);
  HomologyDims h;
  h.dims.resize(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k) h.dims[k] = faces[k].size() - ranks[k] - ranks[k + 1];
  return h;
}

HomologyDims reduced_homology_dims(const FaceLevels& faces, Field field) {
  std::vector<std::size_t> vertices;
  for (const auto& level : faces) {
    for (const auto& face : level) vertices.insert(vertices.end(), face.begin(), face.end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() <= 64) {
    FaceMasks masks;
    for (const auto& level : faces) {
      auto& out = masks.emplace_back();
      for (const auto& face : level) {
        std::uint64_t m = 0;
        for (std::size_t v : face) {
          m |= std::uint64_t{1} << (std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
        }
        out.push_back(m);
      }
      std::sort(out.begin(), out.end());
    }
    return reduced_homology_dims(masks, field);
  }
  const ChainComplexMatrices cc = chain_complex(faces);
  if (!cc.squares_to_zero()) throw std::logic_error("boundary maps do not compose to zero");
  const std::size_t levels = cc.face_counts.size();
  std::vector<std::size_t> ranks(levels + 1, 0);
  for (std::size_t k = 1; k < levels; ++k) ranks[k] = matrix_rank(cc.boundaries[k], field);
  HomologyDims h;
  h.dims.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) h.dims[k] = cc.face_counts[k] - ranks[k] - ranks[k + 1];
  return h;
}

std::string format_betti(const BettiVector& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(b[i]);
  }
  return out + ")";
}

namespace {

void trim(BettiVector& b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
}

// Adds dim H~_d to beta_{d+2}.
void accumulate_shifted(BettiVector& b, const HomologyDims& h) {
  for (std::size_t k = 0; k < h.dims.size(); ++k) {
    if (h.dims[k] == 0) continue;
    const std::size_t i = k + 1;  // d = k - 1, i = d + 2
    if (b.size() < i) b.resize(i, 0);
    b[i - 1] += h.dims[k];
  }
}

}  // namespace

BettiVector betti_wilmes(const Multigraph& g) {
  if (g.vertex_count() < 2) throw GraphError("Betti numbers need at least two vertices");
  BettiVector b(g.vertex_count() - 1, 0);
  for (const ConnectedPartition& pi : connected_partitions(g)) {
    if (pi.size() < 2) continue;
    b[pi.size() - 2] += mpf_count(contract(g, pi));
  }
  trim(b);
  return b;
}

std::vector<GpwRow> gpw_breakdown(const LcmLattice& lattice, Field field) {
  const FiniteLattice& order = lattice.order;
  const MobiusTable mu = mobius(order);
  std::vector<GpwRow> rows;
  for (std::size_t x : order.linear_extension()) {
    if (x == order.bottom()) continue;
    GpwRow row;
    row.element = x;
    row.graded = order.graded();
    row.rank = order.graded() ? order.rank(x) : 0;
    row.mobius = mu[x];
    row.homology = interval_homology(order, x, field);
    rows.push_back(std::move(row));
  }
  return rows;
}

BettiVector betti_gpw(const std::vector<GpwRow>& rows) {
  BettiVector b;
  for (const GpwRow& row : rows) accumulate_shifted(b, row.homology);
  trim(b);
  return b;
}

BettiVector betti_gpw(const MonomialIdeal& ideal, Field field) {
  if (ideal.generators.empty()) return {};
  return betti_gpw(gpw_breakdown(lcm_lattice(ideal), field));
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b) {
  const std::vector<std::size_t> supp = b.support();
  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(ideal.generators.begin(), ideal.generators.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> face;
  Monomial rest = b;
  // Faces are closed downward, so a failed face prunes all its extensions.
  auto grow = [&](auto&& self, std::size_t from) -> void {
    faces.push_back(face);
    for (std::size_t i = from; i < supp.size(); ++i) {
      --rest.exponents[supp[i]];
      if (in_ideal(rest)) {
        face.push_back(supp[i]);
        self(self, i + 1);
        face.pop_back();
      }
      ++rest.exponents[supp[i]];
    }
  };
  if (!in_ideal(b)) return SimplicialComplex{};
  grow(grow, 0);
  return SimplicialComplex(std::move(faces));
}

namespace {

// upper_koszul_complex as bitmasks over positions in the support of b.
FaceMasks upper_koszul_masks(const MonomialIdeal& ideal, const Monomial& b, const std::vector<std::size_t>& supp) {
  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(ideal.generators.begin(), ideal.generators.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  FaceMasks levels;
  if (!in_ideal(b)) return levels;
  Monomial rest = b;
  auto grow = [&](auto&& self, std::size_t from, std::uint64_t face, std::size_t size) -> void {
    if (levels.size() <= size) levels.resize(size + 1);
    levels[size].push_back(face);
    for (std::size_t i = from; i < supp.size(); ++i) {
      --rest.exponents[supp[i]];
      if (in_ideal(rest)) self(self, i + 1, face | (std::uint64_t{1} << i), size + 1);
      ++rest.exponents[supp[i]];
    }
  };
  grow(grow, 0, 0, 0);
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return levels;
}

}  // namespace

BettiVector betti_koszul(const MonomialIdeal& ideal, Field field) {
  if (ideal.generators.empty()) return {};
  BettiVector b;
  // Multigraded Betti numbers vanish outside the lcms of generators.
  for (const Monomial& m : lcm_closure(ideal)) {
    // beta_{j,b}(I) = dim H~_{j-1}(K^b); beta_i(quotient) = beta_{i-1}(I).
    const std::vector<std::size_t> supp = m.support();
    if (supp.size() <= 64) {
      const FaceMasks faces = upper_koszul_masks(ideal, m, supp);
      if (!faces.empty()) accumulate_shifted(b, reduced_homology_dims(faces, field));
    } else {
      accumulate_shifted(b, reduced_homology_dims(upper_koszul_complex(ideal, m), field));
    }
  }
  trim(b);
  return b;
}

BettiVector betti_mobius(const FiniteLattice& lattice, const MobiusTable& mu) {
  BettiVector b;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    const std::size_t r = lattice.rank(x);
    if (r == 0) continue;
    if (b.size() < r) b.resize(r, 0);
    b[r - 1] += static_cast<std::uint64_t>(std::llabs(mu[x]));
  }
  trim(b);
  return b;
}

}  // namespace parkbetti
