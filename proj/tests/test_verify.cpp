#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "json.hpp"
#include "oracles.hpp"
#include "parkbetti/verify.hpp"

using namespace parkbetti;

namespace {

Multigraph kite() { return parse_graph("v:4; a 1 2; b 1 3; c 1 4; d 2 3; e 3 4"); }

std::size_t simple_count(const std::vector<Multigraph>& graphs) {
  return static_cast<std::size_t>(std::count_if(graphs.begin(), graphs.end(), [](const Multigraph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
        if (g.multiplicity(i, j) > 1) return false;
      }
    }
    return true;
  }));
}

}  // namespace

TEST(Corpus, SmallExamples) {
  const auto three = generate_corpus(3, 64, false);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0].edge_count(), 2u);
  EXPECT_EQ(three[1].edge_count(), 3u);

  const auto bananas = generate_corpus(2, 3, true);
  ASSERT_EQ(bananas.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(bananas[k].multiplicity(0, 1), k + 1);

  EXPECT_EQ(generate_corpus(4, 64, false).size(), 6u);
  EXPECT_EQ(generate_corpus_upto(3, 64, false).size(), 3u);
}

TEST(Corpus, SimpleCountsMatchBruteForce) {
  for (std::size_t n = 2; n <= 5; ++n) {
    EXPECT_EQ(generate_corpus(n, 64, false).size(), oracle::count_connected_multigraphs(n, 1)) << n;
  }
  EXPECT_EQ(generate_corpus(6, 64, false).size(), 112u);
}

TEST(Corpus, MultiCountsMatchBruteForce) {
  for (std::size_t n = 2; n <= 4; ++n) {
    EXPECT_EQ(generate_corpus(n, 64, true).size(), oracle::count_connected_multigraphs(n, 3)) << n;
  }
  EXPECT_EQ(generate_corpus(5, 64, true).size(), 10364u);
}

TEST(Corpus, EdgeCapAndShape) {
  for (const Multigraph& g : generate_corpus_upto(4, 5, true)) {
    EXPECT_LE(g.edge_count(), 5u);
    EXPECT_EQ(g.sink(), g.vertex_count() - 1);
    EXPECT_EQ(g.edge(0).label, "e1");
  }
  EXPECT_EQ(simple_count(generate_corpus(4, 64, true)), 6u);
}

TEST(Corpus, DeterministicAndIsomorphismFree) {
  const auto a = generate_corpus(5, 64, true);
  EXPECT_EQ(a, generate_corpus(5, 64, true));
  std::set<std::uint64_t> codes;
  for (const Multigraph& g : a) {
    std::vector<std::uint8_t> mult;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) mult.push_back(static_cast<std::uint8_t>(g.multiplicity(i, j)));
    }
    codes.insert(canonical_code(5, mult));
  }
  EXPECT_EQ(codes.size(), a.size());
}

TEST(Corpus, CanonicalCodeIgnoresLabeling) {
  // Path 1-2-3 written with the middle vertex first and last.
  EXPECT_EQ(canonical_code(3, {1, 0, 1}), canonical_code(3, {1, 1, 0}));
  EXPECT_EQ(canonical_code(3, {2, 0, 1}), canonical_code(3, {0, 1, 2}));
  EXPECT_NE(canonical_code(3, {1, 1, 0}), canonical_code(3, {1, 1, 1}));
}

TEST(Corpus, Bounds) {
  EXPECT_THROW(generate_corpus(1, 64, false), std::invalid_argument);
  EXPECT_THROW(generate_corpus(8, 64, false), std::invalid_argument);
}

TEST(VerifyGraph, Kite) {
  const VerificationReport r = verify_graph(kite(), "kite");
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checks.size(), check_names().size());
  ASSERT_EQ(r.betti.size(), 4u);
  for (const SinkBetti& s : r.betti) {
    EXPECT_EQ(s.by_method.size(), 6u);
    for (const auto& [method, b] : s.by_method) EXPECT_EQ(b, (BettiVector{6, 9, 4})) << method;
  }
}

TEST(VerifyGraph, K3AndBanana) {
  const VerificationReport k3 = verify_graph(parse_graph("v:3; a 1 2; b 1 3; c 2 3"), "k3");
  EXPECT_TRUE(k3.pass());
  EXPECT_EQ(k3.betti.front().by_method.at("wilmes"), (BettiVector{3, 2}));
  const VerificationReport b2 = verify_graph(parse_graph("v:2; a 1 2; b 1 2"), "banana");
  EXPECT_TRUE(b2.pass());
  EXPECT_EQ(b2.betti.front().by_method.at("koszul-I"), (BettiVector{1}));
  EXPECT_THROW(verify_graph(Multigraph(1, {}), "point"), GraphError);
}

TEST(VerifyGraph, OwnSinkOnlyAndSingleField) {
  VerifyOptions o;
  o.all_sinks = false;
  o.fields = {Field::rationals()};
  const VerificationReport r = verify_graph(kite(), "kite", o);
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.betti.size(), 1u);
  EXPECT_EQ(r.betti.front().sink, 3u);
}

TEST(VerifyGraph, PassesOnSmallCorpus) {
  const auto graphs = generate_corpus_upto(4, 64, true);
  const auto reports = verify_all(graphs, {}, VerifyOptions{}, 2);
  ASSERT_EQ(reports.size(), graphs.size());
  for (const VerificationReport& r : reports) EXPECT_TRUE(r.pass()) << r.graph_text;
}

TEST(Report, JsonIsDeterministicAcrossThreadCounts) {
  const auto graphs = generate_corpus_upto(3, 64, true);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < graphs.size(); ++i) ids.push_back("g" + std::to_string(i));
  const std::string one = report_json(verify_all(graphs, ids, VerifyOptions{}, 1), false);
  const std::string three = report_json(verify_all(graphs, ids, VerifyOptions{}, 3), false);
  EXPECT_EQ(one, three);
  const auto doc = nlohmann::json::parse(one);
  EXPECT_EQ(doc["graphs"], graphs.size());
  EXPECT_EQ(doc["failed"], 0);
  ASSERT_EQ(doc["reports"].size(), graphs.size());
  EXPECT_EQ(doc["reports"][0]["graph"], "g0");
}

TEST(Report, SingleJsonAndTable) {
  const VerificationReport r = verify_graph(kite(), "kite");
  const auto doc = nlohmann::json::parse(report_json(r, true));
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["checks"].size(), check_names().size());
  EXPECT_EQ(doc["checks"]["betti-equality"]["pass"], true);
  EXPECT_EQ(doc["betti"][0]["wilmes"], (nlohmann::json{6, 9, 4}));
  EXPECT_TRUE(doc.contains("seconds"));
  EXPECT_FALSE(nlohmann::json::parse(report_json(r, false)).contains("seconds"));

  const std::string table = report_table({r});
  EXPECT_NE(table.find("kite"), std::string::npos);
  EXPECT_NE(table.find("(6, 9, 4)"), std::string::npos);
  EXPECT_THROW(r.check("no-such-check"), std::out_of_range);
}

TEST(Figure, KiteDot) {
  const std::string dot = export_figure(kite(), FigureFormat::dot);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  EXPECT_EQ(nodes, 13u);
  EXPECT_NE(dot.find("x1^3\\ny_a*y_b*y_c\\nz1_a*z1_b*z1_c"), std::string::npos);
  EXPECT_NE(dot.find("x3^3\\ny_b*y_d*y_e\\nz2_b*z2_d*z1_e"), std::string::npos);
}

TEST(Figure, KiteJson) {
  const auto doc = nlohmann::json::parse(export_figure(kite(), FigureFormat::json));
  ASSERT_EQ(doc["elements"].size(), 13u);
  std::vector<std::multiset<std::int64_t>> by_rank(4);
  std::size_t with_triples = 0;
  for (const auto& e : doc["elements"]) {
    by_rank[e["rank"].get<std::size_t>()].insert(e["mobius"].get<std::int64_t>());
    if (e.contains("generators")) ++with_triples;
  }
  EXPECT_EQ(with_triples, 6u);
  EXPECT_EQ(by_rank[0], (std::multiset<std::int64_t>{1}));
  EXPECT_EQ(by_rank[1], (std::multiset<std::int64_t>{-1, -1, -1, -1, -1, -1}));
  EXPECT_EQ(by_rank[2], (std::multiset<std::int64_t>{2, 2, 1, 2, 2}));
  EXPECT_EQ(by_rank[3], (std::multiset<std::int64_t>{-4}));
}

TEST(Figure, SingleEdgeJson) {
  const auto doc = nlohmann::json::parse(export_figure(parse_graph("v:2; a 1 2"), FigureFormat::json));
  EXPECT_EQ(doc["elements"].size(), 2u);
  EXPECT_EQ(doc["covers"].size(), 1u);
}
