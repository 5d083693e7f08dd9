#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "parkbetti/graph.hpp"

namespace parkbetti {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

std::size_t parse_index(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw GraphError("line " + std::to_string(line) + ": expected a positive integer, got '" + std::string(word) + "'");
  }
  return value;
}

std::size_t to_zero_based(std::size_t one_based, std::size_t n, std::size_t line) {
  if (one_based == 0 || one_based > n) {
    throw GraphError("line " + std::to_string(line) + ": vertex index " + std::to_string(one_based) +
                     " outside 1.." + std::to_string(n));
  }
  return one_based - 1;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<std::size_t> sink;
  std::size_t sink_line = 0;
  std::vector<Edge> edges;

  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view stmt = text.substr(start, end - start);
    if (auto hash = stmt.find('#'); hash != std::string_view::npos) stmt = stmt.substr(0, hash);
    stmt = trim(stmt);

    if (!stmt.empty()) {
      if (stmt.starts_with("v:")) {
        if (n) throw GraphError("line " + std::to_string(line_no) + ": duplicate vertex-count header");
        n = parse_index(trim(stmt.substr(2)), line_no);
      } else if (stmt.starts_with("sink:")) {
        sink = parse_index(trim(stmt.substr(5)), line_no);
        sink_line = line_no;
      } else {
        if (!n) throw GraphError("line " + std::to_string(line_no) + ": edge before 'v:<n>' header");
        auto words = split_words(stmt);
        if (words.size() != 3) {
          throw GraphError("line " + std::to_string(line_no) + ": expected '<label> <i> <j>', got '" +
                           std::string(stmt) + "'");
        }
        std::size_t i = to_zero_based(parse_index(words[1], line_no), *n, line_no);
        std::size_t j = to_zero_based(parse_index(words[2], line_no), *n, line_no);
        if (i == j) throw GraphError("line " + std::to_string(line_no) + ": edge '" + std::string(words[0]) + "' is a loop");
        edges.push_back({std::string(words[0]), std::min(i, j), std::max(i, j)});
      }
    }
    if (end < text.size() && text[end] == '\n') ++line_no;
    start = end + 1;
  }

  if (!n) throw GraphError("missing 'v:<n>' header");
  if (*n == 0) throw GraphError("graph has no vertices");
  std::size_t sink_index = sink ? to_zero_based(*sink, *n, sink_line) : *n - 1;
  return Multigraph(*n, std::move(edges), sink_index);
}

Multigraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("malformed JSON: ") + e.what());
  }
  try {
    std::vector<std::string> labels;
    if (doc.at("vertices").is_array()) {
      labels = doc.at("vertices").get<std::vector<std::string>>();
    } else {
      auto n = doc.at("vertices").get<std::size_t>();
      for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
    }
    const std::size_t n = labels.size();
    if (n == 0) throw GraphError("graph has no vertices");
    std::size_t sink = n - 1;
    if (doc.contains("sink")) sink = to_zero_based(doc.at("sink").get<std::size_t>(), n, 0);
    std::vector<Edge> edges;
    for (const auto& e : doc.value("edges", nlohmann::json::array())) {
      auto ends = e.at("ends").get<std::vector<std::size_t>>();
      if (ends.size() != 2) throw GraphError("edge needs exactly two endpoints");
      edges.push_back({e.at("label").get<std::string>(), to_zero_based(ends[0], n, 0), to_zero_based(ends[1], n, 0)});
    }
    return Multigraph(std::move(labels), std::move(edges), sink);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("invalid graph document: ") + e.what());
  }
}

Multigraph parse_graph_auto(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_graph_json(text);
  return parse_graph(text);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_auto(buf.str());
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "v:" << g.vertex_count() << "\n";
  out << "sink:" << g.sink() + 1 << "\n";
  for (const Edge& e : g.edges()) out << e.label << " " << e.tail + 1 << " " << e.head + 1 << "\n";
  return out.str();
}

std::string format_graph_json(const Multigraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.vertex_labels();
  doc["sink"] = g.sink() + 1;
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    doc["edges"].push_back({{"label", e.label}, {"ends", {e.tail + 1, e.head + 1}}});
  }
  return doc.dump();
}

}  // namespace parkbetti
