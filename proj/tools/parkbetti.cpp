// Command-line front end: graph parsing, ideals, lattices, Betti numbers and
// the full verification report.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "parkbetti/chipfiring.hpp"
#include "parkbetti/graph.hpp"
#include "parkbetti/homology.hpp"
#include "parkbetti/ideal.hpp"
#include "parkbetti/lattice.hpp"
#include "parkbetti/verify.hpp"

using namespace parkbetti;

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field parse_field(std::uint32_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw std::invalid_argument("--char must be 0 or a prime, got " + std::to_string(characteristic));
  }
  return Field{characteristic};
}

Multigraph load(const std::string& path, std::optional<std::size_t> sink) {
  Multigraph g = read_graph_file(path);
  if (sink) {
    if (*sink == 0 || *sink > g.vertex_count()) throw GraphError("--sink out of range");
    g = g.with_sink(*sink - 1);
  }
  return g;
}

MonomialIdeal ideal_of(const Multigraph& g, const std::string& which) {
  if (which == "I") return parking_ideal(g);
  if (which == "J") return cutset_ideal(g);
  return oriented_cutset_ideal(g);
}

std::string config_json(const std::vector<ChipConfig>& configs) {
  return nlohmann::json(configs).dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parking-function ideals, connected partition lattices and their Betti numbers"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::size_t> sink;
  std::uint32_t characteristic = kDefaultFields[0].characteristic;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    auto* opt = sub->add_option("file", file, "Graph file (edge-list text or JSON)");
    if (needs_file) opt->required();
    sub->add_option("--sink", sink, "Sink vertex (1-based)");
  };

  auto* parse = app.add_subcommand("parse", "Validate a graph and echo its canonical form");
  bool parse_json = false;
  add_common(parse, true);
  parse->add_flag("--json", parse_json, "Emit the JSON mirror instead of edge-list text");

  auto* ideal = app.add_subcommand("ideal", "Print the generators of I, J or K");
  std::string which = "I";
  bool ideal_json = false;
  add_common(ideal, true);
  ideal->add_option("--which", which, "Ideal")->check(CLI::IsMember({"I", "J", "K"}));
  ideal->add_flag("--json", ideal_json, "JSON list of exponent maps");

  auto* lattice = app.add_subcommand("lattice", "Print or export the connected partition lattice");
  bool dual = false;
  bool with_mobius = false;
  std::string lattice_format = "text";
  add_common(lattice, true);
  lattice->add_flag("--dual", dual, "Use the order dual");
  lattice->add_flag("--mobius", with_mobius, "Annotate mu(0, x)");
  lattice->add_option("--format", lattice_format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));

  auto* mpf = app.add_subcommand("mpf", "Maximal parking functions and their count");
  bool list_all = false;
  add_common(mpf, true);
  mpf->add_flag("--all", list_all, "Also list every parking function");

  auto* betti = app.add_subcommand("betti", "Coarse Betti vector of the quotient ring");
  std::string method = "wilmes";
  std::string betti_ideal;
  add_common(betti, true);
  betti->add_option("--method", method, "Computation route")
      ->check(CLI::IsMember({"wilmes", "gpw", "koszul", "mobius"}));
  betti->add_option("--ideal", betti_ideal, "Ideal for gpw/koszul/mobius")->check(CLI::IsMember({"I", "J", "K"}));
  betti->add_option("--char", characteristic, "Coefficient characteristic (prime, or 0 for QQ)");

  auto* verify = app.add_subcommand("verify", "Run every check on a graph or a generated corpus");
  std::optional<std::size_t> corpus;
  std::size_t max_edges = 64;
  bool multi = false;
  bool pretty = false;
  bool timings = false;
  bool own_sink = false;
  std::size_t jobs = 1;
  std::optional<std::uint32_t> verify_char;
  add_common(verify, false);
  verify->add_option("--corpus", corpus, "Verify every connected graph on 2..N vertices (N <= 7)");
  verify->add_option("--max-edges", max_edges, "Corpus edge cap, counted with multiplicity");
  verify->add_flag("--multi", multi, "Add parallel-edge variants (multiplicity <= 3)");
  verify->add_flag("--pretty", pretty, "Table instead of JSON");
  verify->add_flag("--timings", timings, "Include per-phase timings in JSON output");
  verify->add_flag("--own-sink-only", own_sink, "Skip the sweep over sink choices");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_option("--char", verify_char, "Use a single characteristic instead of GF(32003) and GF(2)");

  auto* figure = app.add_subcommand("figure", "Annotated Hasse diagram of the dual lattice");
  std::string figure_format = "dot";
  add_common(figure, true);
  figure->add_option("--format", figure_format, "Output format")->check(CLI::IsMember({"dot", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed()) {
      Multigraph g = load(file, sink);
      std::cout << (parse_json ? format_graph_json(g) + "\n" : format_graph(g));
      return 0;
    }

    if (ideal->parsed()) {
      MonomialIdeal i = ideal_of(load(file, sink), which);
      std::cout << (ideal_json ? i.to_json() + "\n" : i.format());
      return 0;
    }

    if (lattice->parsed()) {
      Multigraph g = load(file, sink);
      PartitionLattice l = connected_partition_lattice(g);
      if (dual) l = dualize(l);
      MobiusTable mu = mobius(l.order);
      const MobiusTable* mu_ptr = with_mobius ? &mu : nullptr;
      if (lattice_format == "json") {
        std::cout << partition_lattice_json(g, l, mu_ptr) << "\n";
      } else if (lattice_format == "dot") {
        std::cout << partition_lattice_dot(g, l, mu_ptr);
      } else {
        for (std::size_t x : l.order.linear_extension()) {
          std::cout << l.order.rank(x) << "  " << l.elements[x].to_string(g);
          if (with_mobius) std::cout << "  mu=" << mu[x];
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (mpf->parsed()) {
      Multigraph g = load(file, sink);
      auto maximal = maximal_parking_functions(g);
      std::cout << "sink: " << g.vertex_label(g.sink()) << "\n";
      std::cout << "maximal: " << config_json(maximal) << "\n";
      std::cout << "mpf: " << maximal.size() << "\n";
      if (list_all) {
        auto all = enumerate_parking_functions(g);
        std::cout << "parking functions (" << all.size() << "): " << config_json(all) << "\n";
      }
      return 0;
    }

    if (betti->parsed()) {
      Multigraph g = load(file, sink);
      const Field field = parse_field(characteristic);
      BettiVector b;
      if (method == "wilmes") {
        b = betti_wilmes(g);
      } else if (method == "mobius") {
        if (betti_ideal.empty()) {
          PartitionLattice l = dualize(connected_partition_lattice(g));
          b = betti_mobius(l.order, mobius(l.order));
        } else {
          LcmLattice l = lcm_lattice(ideal_of(g, betti_ideal));
          b = betti_mobius(l.order, mobius(l.order));
        }
      } else {
        MonomialIdeal i = ideal_of(g, betti_ideal.empty() ? "I" : betti_ideal);
        b = method == "gpw" ? betti_gpw(i, field) : betti_koszul(i, field);
      }
      std::cout << nlohmann::json(b).dump() << "\n";
      return 0;
    }

    if (verify->parsed()) {
      VerifyOptions options;
      options.all_sinks = !own_sink;
      options.timings = timings;
      if (verify_char) options.fields = {parse_field(*verify_char)};
      std::vector<Multigraph> graphs;
      std::vector<std::string> ids;
      if (corpus) {
        graphs = generate_corpus_upto(*corpus, max_edges, multi);
        for (std::size_t i = 0; i < graphs.size(); ++i) ids.push_back("corpus-" + std::to_string(i + 1));
      } else {
        if (file.empty()) throw std::invalid_argument("verify needs a graph file or --corpus N");
        graphs.push_back(load(file, sink));
        ids.push_back(file);
      }
      auto reports = verify_all(graphs, ids, options, jobs);
      if (pretty) {
        std::cout << report_table(reports);
      } else if (reports.size() == 1 && !corpus) {
        std::cout << report_json(reports.front(), timings) << "\n";
      } else {
        std::cout << report_json(reports, timings) << "\n";
      }
      for (const auto& r : reports) {
        if (!r.pass()) return 1;
      }
      return 0;
    }

    if (figure->parsed()) {
      Multigraph g = load(file, sink);
      std::cout << export_figure(g, figure_format == "json" ? FigureFormat::json : FigureFormat::dot);
      if (figure_format == "json") std::cout << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
