#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "parkbetti/ideal.hpp"
#include "parkbetti/lattice.hpp"
#include "parkbetti/verify.hpp"

namespace parkbetti {

namespace {

struct AtomLabels {
  std::string x;
  std::string y;
  std::string z;
};

// Generator triple for each connected cut, keyed by its source side.
std::map<VertexSet, AtomLabels> atom_labels(const Multigraph& g) {
  const std::vector<Cut> cuts = enumerate_connected_cuts(g);
  const MonomialIdeal i = parking_ideal(g);
  const MonomialIdeal j = cutset_ideal(g);
  const MonomialIdeal k = oriented_cutset_ideal(g);
  std::map<VertexSet, AtomLabels> out;
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    out[cuts[c].source_side] = {i.format(i.generators[c]), j.format(j.generators[c]), k.format(k.generators[c])};
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_figure(const Multigraph& g, FigureFormat format) {
  const PartitionLattice dual = dualize(connected_partition_lattice(g));
  const MobiusTable mu = mobius(dual.order);
  const auto labels = atom_labels(g);
  const auto atoms = dual.order.atoms();

  auto source_side = [&](const ConnectedPartition& pi) {
    return pi.blocks()[0].contains(g.sink()) ? pi.blocks()[1] : pi.blocks()[0];
  };
  auto is_atom = [&](std::size_t x) { return std::find(atoms.begin(), atoms.end(), x) != atoms.end(); };

  if (format == FigureFormat::json) {
    nlohmann::ordered_json doc;
    doc["graph"] = nlohmann::ordered_json::parse(format_graph_json(g));
    doc["elements"] = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < dual.size(); ++x) {
      nlohmann::ordered_json e;
      e["id"] = x;
      e["partition"] = dual.elements[x].to_string(g);
      e["rank"] = dual.order.rank(x);
      e["mobius"] = mu[x];
      if (is_atom(x)) {
        const AtomLabels& l = labels.at(source_side(dual.elements[x]));
        e["generators"] = {{"I", l.x}, {"J", l.y}, {"K", l.z}};
      }
      doc["elements"].push_back(std::move(e));
    }
    doc["covers"] = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < dual.size(); ++x) {
      for (std::size_t y : dual.order.upper_covers(x)) doc["covers"].push_back({x, y});
    }
    return doc.dump(2);
  }

  std::ostringstream out;
  out << "digraph dual_connected_partition_lattice {\n";
  out << "  rankdir=BT;\n  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t x = 0; x < dual.size(); ++x) {
    std::string label = dot_escape(dual.elements[x].to_string(g)) + "\\nmu = " + std::to_string(mu[x]);
    if (is_atom(x)) {
      const AtomLabels& l = labels.at(source_side(dual.elements[x]));
      label += "\\n" + dot_escape(l.x) + "\\n" + dot_escape(l.y) + "\\n" + dot_escape(l.z);
    }
    out << "  n" << x << " [label=\"" << label << "\"];  // rank " << dual.order.rank(x) << "\n";
  }
  for (std::size_t x = 0; x < dual.size(); ++x) {
    for (std::size_t y : dual.order.upper_covers(x)) out << "  n" << x << " -> n" << y << " [arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace parkbetti
