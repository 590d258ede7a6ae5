#include "epg/graph_io.hpp"

#include <regex>
#include <sstream>

#include "epg/errors.hpp"

namespace epg {

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw Error("edge list: missing \"n m\" header");
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = 0, v = 0;
    if (!(in >> u >> v)) throw Error("edge list: expected " + std::to_string(m) + " edges");
    if (u >= n || v >= n || u == v) throw Error("edge list: invalid edge on line " + std::to_string(i + 2));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(name) << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Graph parse_dot(std::string_view text) {
  static const std::regex node_re(R"re(^\s*(\d+)\s*\[label="((?:[^"\\]|\\.)*)"\];\s*$)re");
  static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+);\s*$)");
  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, node_re)) {
      const auto v = std::stoul(m[1]);
      if (v != labels.size()) throw Error("DOT: nodes must be declared in index order");
      std::string label;
      const std::string raw = m[2];
      for (std::size_t i = 0; i < raw.size(); ++i) label += raw[i] == '\\' ? raw[++i] : raw[i];
      labels.push_back(label);
    } else if (std::regex_match(line, m, edge_re)) {
      edges.emplace_back(static_cast<Vertex>(std::stoul(m[1])), static_cast<Vertex>(std::stoul(m[2])));
    }
  }
  const std::size_t n = labels.size();
  Graph g(n, std::move(labels));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error("DOT: edge references an undeclared node");
    g.add_edge(u, v);
  }
  return g;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& doc) {
  Graph g(doc.at("n").get<std::size_t>(), doc.at("labels").get<std::vector<std::string>>());
  for (const auto& e : doc.at("edges")) g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return g;
}

}  // namespace epg
