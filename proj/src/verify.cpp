#include "parkbetti/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "parkbetti/chipfiring.hpp"
#include "parkbetti/ideal.hpp"
#include "parkbetti/lattice.hpp"

namespace parkbetti {

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named '" + name + "'");
}

namespace {

class Checks {
public:
  Checks() {
    for (const std::string& name : check_names()) results_.push_back({name, true, 0, {}});
  }

  void record(const std::string& name, bool ok, const std::string& witness_if_failed) {
    CheckResult& c = find(name);
    ++c.runs;
    if (!ok && c.pass) {
      c.pass = false;
      c.witness = witness_if_failed;
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

private:
  CheckResult& find(const std::string& name) {
    for (CheckResult& c : results_) {
      if (c.name == name) return c;
    }
    throw std::out_of_range("no check named '" + name + "'");
  }

  std::vector<CheckResult> results_;
};

class Stopwatch {
public:
  explicit Stopwatch(std::map<std::string, double>& sink) : sink_(sink) {}
  void lap(const std::string& phase) {
    auto now = std::chrono::steady_clock::now();
    sink_[phase] += std::chrono::duration<double>(now - start_).count();
    start_ = now;
  }

private:
  std::map<std::string, double>& sink_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string sink_tag(const Multigraph& g) { return "sink " + g.vertex_label(g.sink()) + ": "; }

ConnectedPartition cut_as_partition(const Multigraph& g, const Cut& c) {
  return ConnectedPartition(g, {c.source_side, c.sink_side});
}

// Betti vectors from every method must coincide; returns a witness on failure.
std::string first_disagreement(const std::map<std::string, BettiVector>& by_method, const std::string& reference) {
  const BettiVector& ref = by_method.at(reference);
  for (const auto& [method, b] : by_method) {
    if (b != ref) return method + " " + format_betti(b) + " != " + reference + " " + format_betti(ref);
  }
  return {};
}

}  // namespace

VerificationReport verify_graph(const Multigraph& graph, const std::string& id, const VerifyOptions& options) {
  if (graph.vertex_count() < 2) throw GraphError("verification needs at least two vertices");
  if (options.fields.empty()) throw std::invalid_argument("verification needs at least one coefficient field");

  VerificationReport report;
  report.graph_id = id;
  report.graph_text = format_graph(graph);
  report.vertices = graph.vertex_count();
  report.edges = graph.edge_count();
  Checks checks;
  Stopwatch clock(report.seconds);

  // Sink-independent structures.
  const PartitionLattice lg = connected_partition_lattice(graph);
  const PartitionLattice dual = dualize(lg);
  const MobiusTable mu = mobius(dual.order);
  std::vector<std::uint64_t> contraction_mpf(dual.size());
  for (std::size_t x = 0; x < dual.size(); ++x) contraction_mpf[x] = mpf_count(contract(graph, dual.elements[x]));
  clock.lap("partition-lattice");

  checks.record("dual-lattice-axioms", dual.order.is_lattice(), "some pair lacks a join or meet");
  checks.record("dual-lattice-axioms", dual.order.graded(), "not graded");
  checks.record("dual-lattice-axioms", dual.order.is_atomic(), "not atomic");
  for (std::size_t x = 0; x < dual.size() && dual.order.graded(); ++x) {
    checks.record("dual-lattice-axioms", dual.order.rank(x) + 1 == dual.elements[x].size(),
                  "rank of " + dual.elements[x].to_string(graph) + " differs from part count - 1");
  }

  // Every element's Mobius value against the signed mpf of its contraction.
  for (std::size_t x = 0; x < dual.size(); ++x) {
    const std::int64_t sign = (dual.elements[x].size() - 1) % 2 == 0 ? 1 : -1;
    const std::int64_t expected = sign * static_cast<std::int64_t>(contraction_mpf[x]);
    std::ostringstream w;
    w << dual.elements[x].to_string(graph) << ": mu " << mu[x] << " != " << expected;
    checks.record("mobius-vs-mpf", mu[x] == expected, w.str());
  }

  BettiVector wilmes(graph.vertex_count() - 1, 0);
  for (std::size_t x = 0; x < dual.size(); ++x) {
    const std::size_t parts = dual.elements[x].size();
    if (parts >= 2) wilmes[parts - 2] += contraction_mpf[x];
  }
  const BettiVector mobius_betti = betti_mobius(dual.order, mu);
  clock.lap("wilmes");

  // Connected cut-set ideal and its lcm-lattice.
  const MonomialIdeal j_ideal = cutset_ideal(graph);
  const LcmLattice lj = lcm_lattice(j_ideal);
  {
    std::vector<std::size_t> phi(dual.size());
    bool images_found = true;
    std::string missing;
    for (std::size_t x = 0; x < dual.size(); ++x) {
      auto idx = lj.index_of(crossing_monomial(graph, dual.elements[x]));
      if (!idx) {
        images_found = false;
        missing = dual.elements[x].to_string(graph);
        break;
      }
      phi[x] = *idx;
    }
    if (!images_found) {
      checks.record("cutset-lattice-isomorphism", false, "y^F(" + missing + ") is not in the lcm-lattice of J");
    } else {
      const IsomorphismCheck iso = lattice_isomorphism(dual.order, lj.order, phi);
      checks.record("cutset-lattice-isomorphism", iso == IsomorphismCheck::isomorphism, std::string("phi: ") + to_string(iso));
    }
    for (std::size_t a = 0; a < dual.size(); ++a) {
      const std::vector<bool> fa = crossing_edges(graph, dual.elements[a]);
      for (std::size_t b = a; b < dual.size(); ++b) {
        const ConnectedPartition joined = dual_partition_join(graph, dual.elements[a], dual.elements[b]);
        const auto generic = dual.order.join(a, b);
        const std::vector<bool> fb = crossing_edges(graph, dual.elements[b]);
        const std::vector<bool> fj = crossing_edges(graph, joined);
        bool ok = generic && dual.elements[*generic] == joined;
        for (std::size_t e = 0; e < fj.size() && ok; ++e) ok = fj[e] == (fa[e] || fb[e]);
        checks.record("cutset-lattice-isomorphism", ok,
                      "join of " + dual.elements[a].to_string(graph) + " and " + dual.elements[b].to_string(graph));
      }
    }
  }
  clock.lap("cutset-lattice-isomorphism");

  // Homology of every open interval of L_J, over every field.
  std::map<std::uint32_t, BettiVector> gpw_j;
  {
    const MobiusTable mu_j = mobius(lj.order);
    for (const Field& field : options.fields) {
      const auto rows = gpw_breakdown(lj, field);
      gpw_j[field.characteristic] = betti_gpw(rows);
      for (const GpwRow& row : rows) {
        const int top = static_cast<int>(row.rank) - 2;
        bool ok = row.graded && row.homology.euler_characteristic() == mu_j[row.element];
        for (int d : row.homology.support()) ok = ok && d == top;
        ok = ok && row.homology.at(top) == static_cast<std::size_t>(std::llabs(mu_j[row.element]));
        std::ostringstream w;
        w << field.name() << " element " << j_ideal.format(lj.elements[row.element]) << " rank " << row.rank
          << " mu " << mu_j[row.element] << " homology in degrees";
        for (int d : row.homology.support()) w << " " << d << ":" << row.homology.at(d);
        checks.record("homology-concentration", ok, w.str());
      }
    }
  }
  clock.lap("homology");

  // Sink-dependent checks.
  std::vector<std::size_t> sinks;
  if (options.all_sinks) {
    for (std::size_t s = 0; s < graph.vertex_count(); ++s) sinks.push_back(s);
  } else {
    sinks.push_back(graph.sink());
  }

  std::set<ConnectedPartition> atoms;
  for (std::size_t a : dual.order.atoms()) atoms.insert(dual.elements[a]);
  std::optional<std::uint64_t> first_mpf;

  for (std::size_t s : sinks) {
    const Multigraph g = graph.with_sink(s);
    const std::string tag = sink_tag(g);

    const std::vector<Cut> cuts = enumerate_connected_cuts(g);
    std::set<ConnectedPartition> cut_parts;
    for (const Cut& c : cuts) cut_parts.insert(cut_as_partition(g, c));
    checks.record("cuts-vs-atoms", cuts.size() == atoms.size() && cut_parts == atoms,
                  tag + std::to_string(cuts.size()) + " connected cuts vs " + std::to_string(atoms.size()) + " atoms");

    const auto pfs = enumerate_parking_functions(g);
    const std::uint64_t trees = spanning_tree_count(g);
    checks.record("pf-count-vs-trees", pfs.size() == trees,
                  tag + std::to_string(pfs.size()) + " parking functions vs " + std::to_string(trees) + " spanning trees");

    const std::uint64_t m = mpf_count(g);
    if (!first_mpf) first_mpf = m;
    checks.record("mpf-sink-invariance", m == *first_mpf,
                  tag + "mpf " + std::to_string(m) + " vs " + std::to_string(*first_mpf));
    clock.lap("chip-firing");

    const MonomialIdeal i_ideal = parking_ideal(g);
    const MonomialIdeal k_ideal = oriented_cutset_ideal(g);
    const MonomialIdeal via_a = apply_substitution(k_ideal, build_substitution_A(g));
    const MonomialIdeal via_b = apply_substitution(k_ideal, build_substitution_B(g));
    checks.record("specialization-A", same_generators(via_a, i_ideal), tag + "K under A gives {" + via_a.format() + "}");
    checks.record("specialization-B", same_generators(via_b, j_ideal), tag + "K under B gives {" + via_b.format() + "}");
    clock.lap("specialization");

    SinkBetti sb;
    sb.sink = s;
    std::string disagreement;
    for (std::size_t f = 0; f < options.fields.size(); ++f) {
      const Field field = options.fields[f];
      std::map<std::string, BettiVector> by_method{
          {"wilmes", wilmes},
          {"mobius-dual-lattice", mobius_betti},
          {"gpw-I", betti_gpw(i_ideal, field)},
          {"gpw-J", gpw_j.at(field.characteristic)},
          {"gpw-K", betti_gpw(k_ideal, field)},
          {"koszul-I", betti_koszul(i_ideal, field)},
      };
      if (disagreement.empty()) {
        std::string d = first_disagreement(by_method, "wilmes");
        if (!d.empty()) disagreement = tag + field.name() + " " + d;
      }
      if (f == 0) {
        sb.by_method = std::move(by_method);
      } else if (disagreement.empty()) {
        for (const auto& [method, b] : by_method) {
          if (sb.by_method.at(method) != b) {
            disagreement = tag + method + " differs between " + options.fields[0].name() + " and " + field.name();
            break;
          }
        }
      }
    }
    checks.record("betti-equality", disagreement.empty(), disagreement);
    report.betti.push_back(std::move(sb));
    clock.lap("betti");
  }

  report.checks = checks.take();
  return report;
}

std::vector<VerificationReport> verify_all(const std::vector<Multigraph>& graphs, const std::vector<std::string>& ids,
                                           const VerifyOptions& options, std::size_t jobs) {
  std::vector<VerificationReport> out(graphs.size());
  auto id_of = [&](std::size_t i) { return i < ids.size() ? ids[i] : "graph-" + std::to_string(i + 1); };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = verify_graph(graphs[i], id_of(i), options);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(graphs.size());
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < graphs.size(); i = next++) {
        try {
          out[i] = verify_graph(graphs[i], id_of(i), options);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

namespace {

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timings) {
  nlohmann::ordered_json doc;
  doc["graph"] = r.graph_id;
  doc["vertices"] = r.vertices;
  doc["edges"] = r.edges;
  doc["pass"] = r.pass();
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json entry{{"pass", c.pass}, {"runs", c.runs}};
    if (!c.pass) entry["witness"] = c.witness;
    checks[c.name] = std::move(entry);
  }
  doc["checks"] = std::move(checks);
  nlohmann::ordered_json betti = nlohmann::ordered_json::array();
  for (const SinkBetti& sb : r.betti) {
    nlohmann::ordered_json entry;
    entry["sink"] = sb.sink + 1;
    for (const auto& [method, b] : sb.by_method) entry[method] = b;
    betti.push_back(std::move(entry));
  }
  doc["betti"] = std::move(betti);
  if (include_timings) doc["seconds"] = r.seconds;
  return doc;
}

}  // namespace

std::string report_json(const VerificationReport& r, bool include_timings) {
  return to_json(r, include_timings).dump(2);
}

std::string report_json(const std::vector<VerificationReport>& reports, bool include_timings) {
  nlohmann::ordered_json doc;
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.pass() ? 0 : 1;
  doc["graphs"] = reports.size();
  doc["failed"] = failed;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) doc["reports"].push_back(to_json(r, include_timings));
  return doc.dump(2);
}

std::string report_table(const std::vector<VerificationReport>& reports) {
  std::size_t width = 8;
  for (const auto& r : reports) width = std::max(width, r.graph_id.size() + 2);
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "graph" << std::setw(4) << "n" << std::setw(5) << "m" << std::setw(6) << "pass"
      << "betti / failures\n";
  for (const auto& r : reports) {
    out << std::setw(static_cast<int>(width)) << r.graph_id << std::setw(4) << r.vertices << std::setw(5) << r.edges << std::setw(6)
        << (r.pass() ? "yes" : "NO");
    if (!r.betti.empty()) out << format_betti(r.betti.front().by_method.at("wilmes"));
    for (const auto& c : r.checks) {
      if (!c.pass) out << "\n    " << c.name << ": " << c.witness;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace parkbetti
