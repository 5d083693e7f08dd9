#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parkbetti/graph.hpp"
#include "parkbetti/homology.hpp"

namespace parkbetti {

// ---------------------------------------------------------------------------
// Corpus generation

/// Canonical code of a multigraph on at most 7 vertices: the smallest
/// upper-triangle multiplicity encoding over all vertex relabelings
/// (2 bits per vertex pair, so multiplicities up to 3).
std::uint64_t canonical_code(std::size_t n, const std::vector<std::uint8_t>& multiplicity);

/// Connected graphs on exactly `vertices` vertices with at most `max_edges`
/// edges counted with multiplicity, one per isomorphism class. With
/// `include_multi`, every multiplicity assignment in {1, 2, 3} of each simple
/// graph is added. Ordered by edge count, then canonical code. Edges are
/// labeled e1, e2, ... and the sink is the last vertex.
/// Throws std::invalid_argument unless 2 <= vertices <= 7.
std::vector<Multigraph> generate_corpus(std::size_t vertices, std::size_t max_edges, bool include_multi);

/// Union of generate_corpus for 2..max_vertices vertices.
std::vector<Multigraph> generate_corpus_upto(std::size_t max_vertices, std::size_t max_edges, bool include_multi);

// ---------------------------------------------------------------------------
// Verification

/// Names of the per-graph checks, in report order.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "cuts-vs-atoms",
      "dual-lattice-axioms",
      "pf-count-vs-trees",
      "mpf-sink-invariance",
      "mobius-vs-mpf",
      "cutset-lattice-isomorphism",
      "specialization-A",
      "specialization-B",
      "betti-equality",
      "homology-concentration",
  };
  return names;
}

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t runs = 0;
  /// First failing instance, empty on pass.
  std::string witness;
};

/// Betti vectors from every method for one sink choice.
struct SinkBetti {
  std::size_t sink = 0;
  std::map<std::string, BettiVector> by_method;
};

struct VerifyOptions {
  std::vector<Field> fields{kDefaultFields.begin(), kDefaultFields.end()};
  /// Run the sink-dependent checks for every vertex as sink, otherwise only
  /// for the graph's own sink.
  bool all_sinks = true;
  bool timings = false;
};

struct VerificationReport {
  std::string graph_id;
  std::string graph_text;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<CheckResult> checks;
  std::vector<SinkBetti> betti;
  std::map<std::string, double> seconds;

  bool pass() const;
  const CheckResult& check(const std::string& name) const;
};

/// Runs every check; failures become report entries rather than exceptions.
/// Throws GraphError for graphs with fewer than two vertices.
VerificationReport verify_graph(const Multigraph& g, const std::string& id, const VerifyOptions& options = {});

/// Verifies graphs on `jobs` worker threads; output order matches input.
std::vector<VerificationReport> verify_all(const std::vector<Multigraph>& graphs, const std::vector<std::string>& ids,
                                           const VerifyOptions& options, std::size_t jobs);

std::string report_json(const VerificationReport& r, bool include_timings);
std::string report_json(const std::vector<VerificationReport>& reports, bool include_timings);
std::string report_table(const std::vector<VerificationReport>& reports);

// ---------------------------------------------------------------------------
// Figure export

enum class FigureFormat { dot, json };

/// Hasse diagram of the dual connected partition lattice with mu(0, pi) on
/// every element and the (x^C, y^F, z^C) generator triple on every atom.
std::string export_figure(const Multigraph& g, FigureFormat format);

}  // namespace parkbetti
