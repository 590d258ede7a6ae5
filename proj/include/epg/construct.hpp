#pragma once

#include <span>
#include <vector>

#include "epg/graph.hpp"
#include "epg/group.hpp"

namespace epg {

struct EnhancedOptions {
  /// Insert one clique per cyclic subgroup not contained in an already inserted
  /// one (processing generators by decreasing order). Output-identical to the
  /// plain "one clique per element" construction.
  bool dedupe_maximal_cyclic = true;
};

/// x ~ y iff x, y lie in a common cyclic subgroup. Vertex i is element i.
Graph enhanced_power_graph(const Group& g, const EnhancedOptions& options = {});

/// x ~ y iff x is a power of y or y is a power of x.
Graph power_graph(const Group& g);

/// x ~ y iff xy = yx, on all of G (central elements included).
Graph commuting_graph_full(const Group& g);

/// A graph with its dominating vertices deleted. `kept[i]` is the vertex of
/// the source graph that became vertex i.
struct ProperGraph {
  Graph graph;
  std::vector<Vertex> removed;
  std::vector<Vertex> kept;
};

ProperGraph remove_dominating(const Graph& g);

/// The enhanced power graph minus its dominating vertices. Throws EmptyGraphError
/// when every vertex dominates (G cyclic).
ProperGraph proper_enhanced_power_graph(const Group& g);

Graph complement(const Graph& g);

/// Induced subgraph on `vertices` (kept in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Deletes degree-0 vertices.
Graph remove_isolated(const Graph& g);

}  // namespace epg
