#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "parkbetti/verify.hpp"

namespace parkbetti {

namespace {

constexpr std::size_t kCorpusMaxVertices = 7;
constexpr std::uint8_t kMaxMultiplicity = 3;

struct PairIndex {
  std::size_t n;
  std::vector<std::vector<std::size_t>> index;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  explicit PairIndex(std::size_t n_) : n(n_), index(n_, std::vector<std::size_t>(n_, 0)) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        index[i][j] = index[j][i] = pairs.size();
        pairs.emplace_back(i, j);
      }
    }
  }
};

std::uint64_t encode(const std::vector<std::uint8_t>& mult) {
  std::uint64_t code = 0;
  for (std::size_t p = 0; p < mult.size(); ++p) code |= std::uint64_t{mult[p]} << (2 * p);
  return code;
}

std::vector<std::uint8_t> decode(std::uint64_t code, std::size_t pairs) {
  std::vector<std::uint8_t> mult(pairs);
  for (std::size_t p = 0; p < pairs; ++p) mult[p] = static_cast<std::uint8_t>((code >> (2 * p)) & 3u);
  return mult;
}

bool connected(const PairIndex& idx, const std::vector<std::uint8_t>& mult) {
  std::vector<bool> seen(idx.n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < idx.n; ++w) {
      if (w != v && !seen[w] && mult[idx.index[v][w]] != 0) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == idx.n;
}

std::size_t total_edges(const std::vector<std::uint8_t>& mult) {
  return std::accumulate(mult.begin(), mult.end(), std::size_t{0});
}

Multigraph build(const PairIndex& idx, const std::vector<std::uint8_t>& mult) {
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < idx.pairs.size(); ++p) {
    for (std::uint8_t k = 0; k < mult[p]; ++k) {
      edges.push_back({"e" + std::to_string(edges.size() + 1), idx.pairs[p].first, idx.pairs[p].second});
    }
  }
  return Multigraph(idx.n, std::move(edges));
}

}  // namespace

std::uint64_t canonical_code(std::size_t n, const std::vector<std::uint8_t>& multiplicity) {
  if (n > kCorpusMaxVertices) throw std::invalid_argument("canonical_code supports at most 7 vertices");
  const PairIndex idx(n);
  if (multiplicity.size() != idx.pairs.size()) throw std::invalid_argument("multiplicity vector has the wrong length");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::uint8_t> relabeled(idx.pairs.size());
  do {
    for (std::size_t p = 0; p < idx.pairs.size(); ++p) {
      relabeled[idx.index[perm[idx.pairs[p].first]][perm[idx.pairs[p].second]]] = multiplicity[p];
    }
    best = std::min(best, encode(relabeled));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Multigraph> generate_corpus(std::size_t vertices, std::size_t max_edges, bool include_multi) {
  if (vertices < 2 || vertices > kCorpusMaxVertices) {
    throw std::invalid_argument("corpus vertex count must lie in 2..7");
  }
  const PairIndex idx(vertices);
  const std::size_t npairs = idx.pairs.size();

  // Simple graphs, one edge at a time, deduplicated per level.
  std::set<std::uint64_t> simple_connected;
  std::set<std::uint64_t> level{0};
  for (std::size_t m = 1; m <= std::min(max_edges, npairs); ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      auto mult = decode(code, npairs);
      for (std::size_t p = 0; p < npairs; ++p) {
        if (mult[p] != 0) continue;
        mult[p] = 1;
        next.insert(canonical_code(vertices, mult));
        mult[p] = 0;
      }
    }
    for (std::uint64_t code : next) {
      if (connected(idx, decode(code, npairs))) simple_connected.insert(code);
    }
    level = std::move(next);
  }

  std::set<std::uint64_t> all = simple_connected;
  if (include_multi) {
    for (std::uint64_t code : simple_connected) {
      const auto base = decode(code, npairs);
      std::vector<std::size_t> present;
      for (std::size_t p = 0; p < npairs; ++p) {
        if (base[p] != 0) present.push_back(p);
      }
      auto mult = base;
      // Odometer over {1, 2, 3}^present.
      while (true) {
        if (total_edges(mult) <= max_edges) all.insert(canonical_code(vertices, mult));
        std::size_t k = 0;
        while (k < present.size() && mult[present[k]] == kMaxMultiplicity) mult[present[k++]] = 1;
        if (k == present.size()) break;
        ++mult[present[k]];
      }
    }
  }

  std::vector<std::pair<std::size_t, std::uint64_t>> ordered;
  for (std::uint64_t code : all) ordered.emplace_back(total_edges(decode(code, npairs)), code);
  std::sort(ordered.begin(), ordered.end());
  std::vector<Multigraph> out;
  out.reserve(ordered.size());
  for (const auto& [m, code] : ordered) out.push_back(build(idx, decode(code, npairs)));
  return out;
}

std::vector<Multigraph> generate_corpus_upto(std::size_t max_vertices, std::size_t max_edges, bool include_multi) {
  std::vector<Multigraph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    auto part = generate_corpus(n, max_edges, include_multi);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace parkbetti
