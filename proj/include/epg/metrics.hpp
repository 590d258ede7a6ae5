#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "epg/errors.hpp"
#include "epg/graph.hpp"

namespace epg {

/// Vertices adjacent to every other vertex.
std::vector<Vertex> dominating_vertices(const Graph& g);

struct Components {
  std::vector<std::vector<Vertex>> parts;  // ordered by smallest member
  std::vector<std::uint32_t> component_of;

  std::size_t count() const { return parts.size(); }
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Hop distances from `source`; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Largest eccentricity; nullopt when disconnected. 0 for graphs with <= 1 vertex.
std::optional<std::size_t> diameter(const Graph& g);

/// Greedy dominating set: repeatedly take the vertex covering the most
/// uncovered vertices (lowest index on ties).
std::vector<Vertex> greedy_dominating_set(const Graph& g);
std::size_t greedy_domination_upper(const Graph& g);

bool is_dominating_set(const Graph& g, const std::vector<Vertex>& set);

struct DominationOptions {
  std::size_t max_n = 400;
  /// Overrides `max_n` when set.
  std::optional<std::size_t> limit;
  std::uint64_t node_budget = 50'000'000;
};

/// Exact domination number by branch and bound, solved per connected
/// component. Throws BoundExceededError or SearchBudgetExceeded.
std::size_t domination_number_exact(const Graph& g, const DominationOptions& options = {});

struct ConnectivityOptions {
  std::size_t max_n = 300;
};

/// Number of internally vertex-disjoint s-t paths for non-adjacent s, t
/// (unit vertex capacities), stopping early once `cap` is reached.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t,
                                      std::size_t cap = SIZE_MAX);

/// Exact kappa(G); n-1 for complete graphs, 0 when disconnected.
std::size_t vertex_connectivity(const Graph& g, const ConnectivityOptions& options = {});

struct MetricReport {
  std::vector<Vertex> dom_vertices;
  std::size_t component_count = 0;
  std::vector<std::vector<Vertex>> components;
  std::optional<std::size_t> diameter;  // nullopt = infinite
  std::optional<std::size_t> domination_number;  // nullopt = not computed
  std::optional<std::size_t> vertex_connectivity;
};

struct MetricOptions {
  DominationOptions domination;
  ConnectivityOptions connectivity;
};

/// Runs every metric; the exact searches are left empty when their bounds are
/// exceeded.
MetricReport metric_report(const Graph& g, const MetricOptions& options = {});

}  // namespace epg
