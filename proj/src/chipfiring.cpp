#include "parkbetti/chipfiring.hpp"

namespace parkbetti {

namespace {

// Burning test without input validation; `chips` is indexed by vertex and
// the sink entry is ignored.
bool burns_completely(const Multigraph& g, const std::vector<std::int64_t>& chips) {
  VertexSet burnt = VertexSet::single(g.sink());
  VertexSet unburnt = g.all_vertices() - burnt;
  bool changed = true;
  while (changed && !unburnt.empty()) {
    changed = false;
    VertexSet caught;
    unburnt.for_each([&](std::size_t v) {
      std::int64_t into_fire = 0;
      (g.neighbours(v) & burnt).for_each([&](std::size_t w) {
        into_fire += static_cast<std::int64_t>(g.multiplicity(v, w));
      });
      if (into_fire > chips[v]) caught.insert(v);
    });
    if (!caught.empty()) {
      burnt = burnt | caught;
      unburnt = unburnt - caught;
      changed = true;
    }
  }
  return unburnt.empty();
}

std::vector<std::int64_t> spread(const Multigraph& g, const ChipConfig& c) {
  std::vector<std::int64_t> chips(g.vertex_count(), 0);
  std::size_t i = 0;
  for (std::size_t v : g.non_sink_vertices()) chips[v] = c[i++];
  return chips;
}

// Visits every configuration in the box prod [0, deg(v) - 1] that parks,
// in lexicographic order.
template <class F>
void for_each_parking_function(const Multigraph& g, F&& visit) {
  const std::vector<std::size_t> vs = g.non_sink_vertices();
  const std::size_t m = vs.size();
  std::vector<std::int64_t> chips(g.vertex_count(), 0);
  ChipConfig c(m, 0);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) chips[vs[i]] = c[i];
    if (burns_completely(g, chips)) visit(c, chips);
    // Odometer step, last coordinate fastest.
    std::size_t k = m;
    while (k > 0) {
      --k;
      if (c[k] + 1 < static_cast<std::int64_t>(g.degree(vs[k]))) {
        ++c[k];
        break;
      }
      c[k] = 0;
      if (k == 0) return;
    }
    if (m == 0) return;
  }
}

bool is_maximal(const Multigraph& g, std::vector<std::int64_t>& chips) {
  for (std::size_t v : g.non_sink_vertices()) {
    ++chips[v];
    bool parks = burns_completely(g, chips);
    --chips[v];
    if (parks) return false;
  }
  return true;
}

}  // namespace

bool is_parking_function(const Multigraph& g, const ChipConfig& c) {
  if (c.size() + 1 != g.vertex_count()) {
    throw GraphError("configuration has " + std::to_string(c.size()) + " entries; expected " +
                     std::to_string(g.vertex_count() - 1));
  }
  for (std::int64_t x : c) {
    if (x < 0) throw GraphError("configuration has a negative entry");
  }
  return burns_completely(g, spread(g, c));
}

std::vector<ChipConfig> enumerate_parking_functions(const Multigraph& g) {
  std::vector<ChipConfig> out;
  for_each_parking_function(g, [&](const ChipConfig& c, const std::vector<std::int64_t>&) { out.push_back(c); });
  return out;
}

// Parking functions form an order ideal of the non-negative orthant, so c is
// maximal exactly when no single-coordinate increment still parks.
std::vector<ChipConfig> maximal_parking_functions(const Multigraph& g) {
  std::vector<ChipConfig> out;
  for_each_parking_function(g, [&](const ChipConfig& c, const std::vector<std::int64_t>& chips) {
    auto probe = chips;
    if (is_maximal(g, probe)) out.push_back(c);
  });
  return out;
}

std::uint64_t mpf_count(const Multigraph& g) {
  std::uint64_t count = 0;
  for_each_parking_function(g, [&](const ChipConfig&, const std::vector<std::int64_t>& chips) {
    auto probe = chips;
    if (is_maximal(g, probe)) ++count;
  });
  return count;
}

}  // namespace parkbetti
