#include "epg/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace epg {

Graph::Graph(std::size_t n, std::vector<std::string> labels)
    : rows_(n, VertexSet(n)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != n) throw std::invalid_argument("label count does not match vertex count");
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::add_clique(const VertexSet& members) {
  for (auto v = members.find_first(); v != VertexSet::npos; v = members.find_next(v)) {
    rows_[v] |= members;
    rows_[v].reset(v);
  }
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = rows_[v];
  s.set(v);
  return s;
}

std::size_t Graph::min_degree() const {
  std::size_t d = order() ? order() : 0;
  for (const auto& r : rows_) d = std::min(d, r.count());
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& r : rows_) d = std::max(d, r.count());
  return d;
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const { return to_vector(rows_[v]); }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (order() != other.order()) return false;
  for (std::size_t i = 0; i < order(); ++i)
    if (!rows_[i].is_subset_of(other.rows_[i])) return false;
  return true;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  g.add_clique(g.full_set());
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

std::vector<Vertex> to_vector(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(static_cast<Vertex>(v));
  return out;
}

}  // namespace epg
