#pragma once

// Brute-force reference implementations used only by the tests. Each one
// works straight from a definition and shares no code with the library
// beyond the Multigraph accessors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "parkbetti/graph.hpp"

namespace oracle {

using parkbetti::Multigraph;

inline std::vector<std::vector<std::size_t>> adjacency_counts(const Multigraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) {
    ++adj[e.tail][e.head];
    ++adj[e.head][e.tail];
  }
  return adj;
}

/// Connectivity of the subgraph induced on `members` by depth-first search.
inline bool induced_connected(const Multigraph& g, const std::vector<std::size_t>& members) {
  if (members.empty()) return false;
  const auto adj = adjacency_counts(g);
  std::set<std::size_t> inside(members.begin(), members.end());
  std::set<std::size_t> seen{members.front()};
  std::vector<std::size_t> stack{members.front()};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : inside) {
      if (adj[v][w] > 0 && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == inside.size();
}

/// Superstability by definition: every nonempty set A of non-sink vertices
/// has some v in A with fewer chips than edges from v to the outside of A.
inline bool is_parking(const Multigraph& g, const std::vector<std::int64_t>& c) {
  const auto adj = adjacency_counts(g);
  std::vector<std::size_t> non_sink;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v != g.sink()) non_sink.push_back(v);
  }
  const std::size_t k = non_sink.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<bool> in_a(g.vertex_count(), false);
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) in_a[non_sink[i]] = true;
    }
    bool some_vertex_ok = false;
    for (std::size_t i = 0; i < k && !some_vertex_ok; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const std::size_t v = non_sink[i];
      std::int64_t out = 0;
      for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        if (!in_a[w]) out += static_cast<std::int64_t>(adj[v][w]);
      }
      some_vertex_ok = c[i] < out;
    }
    if (!some_vertex_ok) return false;
  }
  return true;
}

/// Every configuration in the box prod [0, deg(v)], row-major.
inline std::vector<std::vector<std::int64_t>> bounding_box(const Multigraph& g) {
  std::vector<std::int64_t> hi;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v != g.sink()) hi.push_back(static_cast<std::int64_t>(g.degree(v)));
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(hi.size(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = c.size();
    while (i > 0 && c[i - 1] == hi[i - 1]) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  return out;
}

inline std::vector<std::vector<std::int64_t>> parking_functions(const Multigraph& g) {
  std::vector<std::vector<std::int64_t>> out;
  for (auto& c : bounding_box(g)) {
    if (is_parking(g, c)) out.push_back(c);
  }
  return out;
}

/// Maximal elements by pairwise dominance.
inline std::size_t mpf(const Multigraph& g) {
  const auto pfs = parking_functions(g);
  std::size_t count = 0;
  for (const auto& a : pfs) {
    bool dominated = false;
    for (const auto& b : pfs) {
      if (a == b) continue;
      bool le = true;
      for (std::size_t i = 0; i < a.size(); ++i) le = le && a[i] <= b[i];
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) ++count;
  }
  return count;
}

/// Counts (n-1)-edge subsets that connect every vertex, via union-find.
inline std::uint64_t spanning_trees(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n == 1) return 1;
  std::uint64_t count = 0;
  std::vector<std::size_t> pick(n - 1);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t depth) {
    if (depth == n - 1) {
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      for (std::size_t e : pick) {
        const std::size_t a = find(g.edge(e).tail);
        const std::size_t b = find(g.edge(e).head);
        if (a == b) return;
        parent[a] = b;
      }
      ++count;
      return;
    }
    for (std::size_t e = from; e < m; ++e) {
      pick[depth] = e;
      choose(e + 1, depth + 1);
    }
  };
  choose(0, 0);
  return count;
}

/// Set partitions of 0..n-1 from restricted growth strings; blocks as sorted
/// vertex lists.
inline std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t max_used) {
    if (i == n) {
      std::vector<std::vector<std::size_t>> blocks(max_used + 1);
      for (std::size_t v = 0; v < n; ++v) blocks[rgs[v]].push_back(v);
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      go(i + 1, std::max(max_used, b));
    }
  };
  if (n == 0) return out;
  rgs[0] = 0;
  go(1, 0);
  return out;
}

inline std::vector<std::vector<std::vector<std::size_t>>> connected_partitions(const Multigraph& g) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  for (auto& p : set_partitions(g.vertex_count())) {
    if (std::all_of(p.begin(), p.end(), [&](const auto& b) { return induced_connected(g, b); })) out.push_back(p);
  }
  return out;
}

/// Sink-side-closed connected cuts by subset scan: returns U as a sorted list.
inline std::vector<std::vector<std::size_t>> connected_cuts(const Multigraph& g) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = g.vertex_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask >> g.sink()) & 1u) continue;
    std::vector<std::size_t> u;
    std::vector<std::size_t> w;
    for (std::size_t v = 0; v < n; ++v) ((mask >> v) & 1u ? u : w).push_back(v);
    if (induced_connected(g, u) && induced_connected(g, w)) out.push_back(u);
  }
  return out;
}

/// Mobius function mu(bottom, x) by Hall's theorem: the alternating count
/// of chains bottom = x0 < x1 < ... < xk = x.
inline std::vector<std::int64_t> hall_mobius(std::size_t n, std::size_t bottom,
                                             const std::function<bool(std::size_t, std::size_t)>& less) {
  // chains[x][k] = number of chains of length k from bottom to x.
  std::vector<std::vector<std::int64_t>> chains(n, std::vector<std::int64_t>(n + 1, 0));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) below[x] += less(y, x) ? 1 : 0;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  chains[bottom][0] = 1;
  for (std::size_t x : order) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!less(y, x)) continue;
      for (std::size_t k = 0; k < n; ++k) chains[x][k + 1] += chains[y][k];
    }
  }
  std::vector<std::int64_t> mu(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k <= n; ++k) mu[x] += (k % 2 == 0 ? 1 : -1) * chains[x][k];
  }
  return mu;
}

using Exponents = std::vector<std::uint32_t>;

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

/// Lcms over every nonempty subset of the generators.
inline std::set<Exponents> subset_lcms(const std::vector<Exponents>& gens) {
  std::set<Exponents> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    Exponents m(gens.front().size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((mask >> i) & 1u) m = lcm(m, gens[i]);
    }
    out.insert(m);
  }
  return out;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Rank mod p by plain Gaussian elimination on a dense copy.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  auto inv = [&](std::int64_t x) {
    std::int64_t r = 1;
    std::int64_t e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t iv = inv(a[rank][c]);
    for (auto& v : a[rank]) v = v * iv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Reduced homology dims (index d + 1) of the complex of all chains in the
/// strict order `less` restricted to `vertices`, over GF(p).
inline std::vector<std::size_t> chain_complex_homology(const std::vector<std::size_t>& vertices,
                                                       const std::function<bool(std::size_t, std::size_t)>& less,
                                                       std::int64_t p) {
  std::vector<std::vector<std::vector<std::size_t>>> faces{{{}}};
  while (true) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& f : faces.back()) {
      for (std::size_t v : vertices) {
        if (f.empty() || less(f.back(), v)) {
          auto g = f;
          g.push_back(v);
          next.push_back(g);
        }
      }
    }
    if (next.empty()) break;
    faces.push_back(next);
  }
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  for (std::size_t k = 1; k < faces.size(); ++k) {
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < faces[k - 1].size(); ++i) index[faces[k - 1][i]] = i;
    std::vector<std::vector<std::int64_t>> m(faces[k].size(), std::vector<std::int64_t>(faces[k - 1].size(), 0));
    for (std::size_t c = 0; c < faces[k].size(); ++c) {
      for (std::size_t drop = 0; drop < faces[k][c].size(); ++drop) {
        auto f = faces[k][c];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
        m[c][index.at(f)] = drop % 2 == 0 ? 1 : -1;
      }
    }
    ranks[k] = rank_mod_p(m, p);
  }
  std::vector<std::size_t> dims(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k) dims[k] = faces[k].size() - ranks[k] - ranks[k + 1];
  return dims;
}

/// Betti vector of S/I from the order complexes of open intervals (1, m) of
/// the subset-lcm lattice, computed literally over GF(p).
inline std::vector<std::uint64_t> betti_from_lcm_order_complexes(const std::vector<Exponents>& gens,
                                                                 std::int64_t p) {
  const auto lcms = subset_lcms(gens);
  const std::vector<Exponents> elems(lcms.begin(), lcms.end());
  auto less = [&](std::size_t a, std::size_t b) { return a != b && divides(elems[a], elems[b]); };
  std::vector<std::uint64_t> betti;
  for (std::size_t m = 0; m < elems.size(); ++m) {
    std::vector<std::size_t> open;
    for (std::size_t x = 0; x < elems.size(); ++x) {
      if (less(x, m)) open.push_back(x);
    }
    const auto dims = chain_complex_homology(open, less, p);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] == 0) continue;
      // dims[k] is H~_{k-1}; it contributes to beta_{k+1}.
      if (betti.size() < k + 1) betti.resize(k + 1, 0);
      betti[k] += dims[k];
    }
  }
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

/// Canonical form of an edge-multiplicity matrix by trying every vertex
/// permutation and keeping the smallest flattened upper triangle.
inline std::vector<std::uint8_t> canonical_upper_triangle(std::size_t n, const std::vector<std::vector<std::uint8_t>>& adj) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  do {
    std::vector<std::uint8_t> flat;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) flat.push_back(adj[perm[i]][perm[j]]);
    }
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Isomorphism classes of connected multigraphs on exactly n vertices with
/// edge multiplicities in [0, max_mult], by exhaustive enumeration.
inline std::size_t count_connected_multigraphs(std::size_t n, std::uint8_t max_mult) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<std::uint8_t> mult(pairs.size(), 0);
  while (true) {
    std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      adj[pairs[k].first][pairs[k].second] = adj[pairs[k].second][pairs[k].first] = mult[k];
    }
    std::vector<bool> reached(n, false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (adj[v][w] && !reached[w]) {
          reached[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (std::all_of(reached.begin(), reached.end(), [](bool b) { return b; })) {
      seen.insert(canonical_upper_triangle(n, adj));
    }
    std::size_t k = 0;
    while (k < mult.size() && mult[k] == max_mult) mult[k++] = 0;
    if (k == mult.size()) break;
    ++mult[k];
  }
  return seen.size();
}

}  // namespace oracle
