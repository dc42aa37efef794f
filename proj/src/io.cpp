#include "rdom/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "rdom/error.hpp"

namespace rdom {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && !(s[i] == ' ' || s[i] == '\t' || s[i] == ',' || s[i] == '\r')) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

ExternalId parse_id(std::string_view token, std::size_t line) {
  ExternalId value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("expected a vertex id, got '" + std::string(token) + "'", line);
  }
  if (value < 0) throw ParseError("negative vertex id " + std::string(token), line);
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<IdPair> edges;
  std::vector<ExternalId> vertices;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    constexpr std::string_view kHeader = "vertices:";
    if (line.substr(0, kHeader.size()) == kHeader) {
      for (auto token : split_tokens(line.substr(kHeader.size()))) vertices.push_back(parse_id(token, line_no));
      continue;
    }
    const auto tokens = split_tokens(line);
    if (tokens.size() != 2) {
      throw ParseError("expected 'u v', got '" + std::string(line) + "'", line_no);
    }
    const ExternalId u = parse_id(tokens[0], line_no);
    const ExternalId v = parse_id(tokens[1], line_no);
    if (u == v) {
      throw ParseError("self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")", line_no);
    }
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(edges, vertices);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  bool isolated = false;
  for (Vertex v = 0; v < g.size(); ++v) isolated = isolated || g.degree(v) == 0;
  if (isolated) {
    out << "vertices:";
    for (ExternalId id : g.ids()) out << ' ' << id;
    out << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << g.id(u) << ' ' << g.id(v) << '\n';
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.id(u), g.id(v)});
  Json j;
  j["n"] = g.size();
  j["edges"] = std::move(edges);
  j["ids"] = std::vector<ExternalId>(g.ids().begin(), g.ids().end());
  return j;
}

Graph graph_from_json(const Json& j) {
  try {
    std::vector<IdPair> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<ExternalId>(), e.at(1).get<ExternalId>());
    const auto ids = j.at("ids").get<std::vector<ExternalId>>();
    Graph g = Graph::from_edges(edges, ids);
    if (g.size() != j.at("n").get<std::size_t>()) throw ParseError("vertex count does not match ids", 0);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what(), 0);
  }
}

}  // namespace rdom
