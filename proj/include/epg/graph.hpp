#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace epg {

using Vertex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph on vertices 0..n-1 with one bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::vector<std::string> labels = {});

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const;

  void add_edge(Vertex u, Vertex v);
  /// Makes `members` a clique.
  void add_clique(const VertexSet& members);

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  VertexSet closed_neighborhood(Vertex v) const;
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  std::vector<Vertex> neighbor_list(Vertex v) const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<std::pair<Vertex, Vertex>> edges() const;
  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet full_set() const { return ~VertexSet(order()); }

  bool same_adjacency(const Graph& other) const { return rows_ == other.rows_; }
  bool is_subgraph_of(const Graph& other) const;

 private:
  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(std::size_t leaves);

std::vector<Vertex> to_vector(const VertexSet& s);

}  // namespace epg
