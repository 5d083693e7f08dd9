#pragma once

#include <cstdint>
#include <vector>

#include "parkbetti/graph.hpp"

namespace parkbetti {

/// Chip counts on the non-sink vertices, in vertex order with the sink omitted.
using ChipConfig = std::vector<std::int64_t>;

/// Dhar's burning test: light the sink, let a vertex catch fire once its
/// edges into burnt vertices outnumber its chips; c parks iff all burn.
/// Throws GraphError on a negative entry or a size mismatch.
bool is_parking_function(const Multigraph& g, const ChipConfig& c);

/// Every parking function w.r.t. g.sink(), in lexicographic order of the
/// configuration vector.
std::vector<ChipConfig> enumerate_parking_functions(const Multigraph& g);

/// Parking functions that are maximal in the coordinatewise order.
std::vector<ChipConfig> maximal_parking_functions(const Multigraph& g);

/// Number of maximal parking functions. The one-vertex graph has exactly
/// one (the empty configuration).
std::uint64_t mpf_count(const Multigraph& g);

}  // namespace parkbetti
