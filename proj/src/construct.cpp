#include "epg/construct.hpp"

#include <algorithm>
#include <numeric>

#include "epg/metrics.hpp"

namespace epg {

namespace {

std::vector<std::string> element_labels(const Group& g) {
  std::vector<std::string> labels;
  labels.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) labels.push_back(g.element_name(x));
  return labels;
}

VertexSet cyclic_set(const Group& g, Element w) {
  VertexSet s(g.order());
  for (Element x : cyclic_subgroup(w, g)) s.set(x);
  return s;
}

}  // namespace

Graph enhanced_power_graph(const Group& g, const EnhancedOptions& options) {
  Graph graph(g.order(), element_labels(g));
  if (!options.dedupe_maximal_cyclic) {
    for (Element w = 0; w < g.order(); ++w) graph.add_clique(cyclic_set(g, w));
    return graph;
  }
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.order_of(a) > g.order_of(b); });
  VertexSet covered(g.order());
  for (Element w : by_order) {
    if (covered.test(w)) continue;
    VertexSet s = cyclic_set(g, w);
    graph.add_clique(s);
    covered |= s;
  }
  return graph;
}

Graph power_graph(const Group& g) {
  Graph graph(g.order(), element_labels(g));
  for (Element y = 0; y < g.order(); ++y)
    for (Element x : cyclic_subgroup(y, g))
      if (x != y) graph.add_edge(x, y);
  return graph;
}

Graph commuting_graph_full(const Group& g) {
  Graph graph(g.order(), element_labels(g));
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x + 1; y < g.order(); ++y)
      if (g.multiply(x, y) == g.multiply(y, x)) graph.add_edge(x, y);
  return graph;
}

ProperGraph remove_dominating(const Graph& g) {
  ProperGraph out;
  out.removed = dominating_vertices(g);
  VertexSet keep = g.full_set();
  for (Vertex v : out.removed) keep.reset(v);
  out.kept = to_vector(keep);
  out.graph = induced_subgraph(g, out.kept);
  return out;
}

ProperGraph proper_enhanced_power_graph(const Group& g) {
  auto out = remove_dominating(enhanced_power_graph(g));
  if (out.kept.empty())
    throw EmptyGraphError("proper enhanced power graph of " + g.name() + " is empty (group is cyclic)");
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order(), g.labels());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (Vertex v : vertices) labels.push_back(g.label(v));
  Graph out(vertices.size(), std::move(labels));
  for (Vertex i = 0; i < vertices.size(); ++i)
    for (Vertex j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  const auto list = to_vector(vertices);
  return induced_subgraph(g, list);
}

Graph remove_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace epg
