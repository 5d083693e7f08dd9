#include <sstream>

#include "json.hpp"

#include "parkbetti/lattice.hpp"

namespace parkbetti {

std::string partition_lattice_json(const Multigraph& g, const PartitionLattice& l, const MobiusTable* mu) {
  nlohmann::ordered_json doc;
  doc["bottom"] = l.order.bottom();
  doc["top"] = l.order.top();
  doc["elements"] = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < l.size(); ++x) {
    nlohmann::ordered_json e{{"id", x}, {"partition", l.elements[x].to_string(g)}, {"parts", l.elements[x].size()}};
    if (l.order.graded()) e["rank"] = l.order.rank(x);
    if (mu) e["mobius"] = (*mu)[x];
    doc["elements"].push_back(std::move(e));
  }
  doc["covers"] = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y : l.order.upper_covers(x)) doc["covers"].push_back({x, y});
  }
  return doc.dump(2);
}

std::string partition_lattice_dot(const Multigraph& g, const PartitionLattice& l, const MobiusTable* mu) {
  std::ostringstream out;
  out << "digraph connected_partition_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t x = 0; x < l.size(); ++x) {
    out << "  n" << x << " [label=\"" << l.elements[x].to_string(g);
    if (mu) out << "\\nmu = " << (*mu)[x];
    out << "\"];\n";
  }
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y : l.order.upper_covers(x)) out << "  n" << x << " -> n" << y << " [arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace parkbetti
