#include "epg/metrics.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace epg {

std::vector<Vertex> dominating_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) out.push_back(v);
  return out;
}

namespace {

/// Bitset BFS; returns the visited set and the eccentricity of `source`.
std::pair<VertexSet, std::size_t> sweep_from(const Graph& g, Vertex source) {
  VertexSet visited(g.order()), frontier(g.order());
  visited.set(source);
  frontier.set(source);
  std::size_t depth = 0;
  while (true) {
    VertexSet next(g.order());
    for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
      next |= g.neighbors(static_cast<Vertex>(v));
    next -= visited;
    if (next.none()) break;
    visited |= next;
    frontier.swap(next);
    ++depth;
  }
  return {std::move(visited), depth};
}

}  // namespace

Components connected_components(const Graph& g) {
  Components c;
  c.component_of.assign(g.order(), UINT32_MAX);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c.component_of[v] != UINT32_MAX) continue;
    auto [visited, depth] = sweep_from(g, v);
    auto members = to_vector(visited);
    for (Vertex u : members) c.component_of[u] = static_cast<std::uint32_t>(c.parts.size());
    c.parts.push_back(std::move(members));
  }
  return c;
}

bool is_connected(const Graph& g) { return connected_components(g).count() <= 1; }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const auto& row = g.neighbors(u);
    for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(static_cast<Vertex>(v));
    }
  }
  return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
  if (g.order() <= 1) return 0;
  std::size_t diam = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto [visited, ecc] = sweep_from(g, v);
    if (visited.count() != g.order()) return std::nullopt;
    diam = std::max(diam, ecc);
  }
  return diam;
}

// ---------------------------------------------------------------------------
// Domination
// ---------------------------------------------------------------------------

namespace {

std::vector<VertexSet> closed_neighborhoods(const Graph& g) {
  std::vector<VertexSet> closed;
  closed.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) closed.push_back(g.closed_neighborhood(v));
  return closed;
}

std::vector<Vertex> greedy_cover(const std::vector<VertexSet>& closed, VertexSet uncovered) {
  std::vector<Vertex> chosen;
  while (uncovered.any()) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex w = 0; w < closed.size(); ++w) {
      const std::size_t gain = (closed[w] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = w;
      }
    }
    chosen.push_back(best);
    uncovered -= closed[best];
  }
  return chosen;
}

class DominationSearch {
 public:
  DominationSearch(const std::vector<VertexSet>& closed, std::uint64_t budget)
      : closed_(closed), budget_(budget) {
    by_degree_.resize(closed.size());
    std::iota(by_degree_.begin(), by_degree_.end(), 0);
    std::stable_sort(by_degree_.begin(), by_degree_.end(), [&](Vertex a, Vertex b) {
      return closed_[a].count() < closed_[b].count();
    });
  }

  /// Minimum dominating set size for the vertices in `target`.
  std::size_t solve(const VertexSet& target, std::size_t& root_lower) {
    best_ = greedy_cover(closed_, target).size();
    root_lower = lower_bound(target);
    if (root_lower < best_) branch(target, 0);
    return best_;
  }

  std::size_t best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t lower_bound(const VertexSet& uncovered) const {
    const std::size_t remaining = uncovered.count();
    if (remaining == 0) return 0;
    // Largest possible coverage by a single vertex.
    std::size_t max_cover = 1;
    VertexSet candidates(uncovered.size());
    for (auto u = uncovered.find_first(); u != VertexSet::npos; u = uncovered.find_next(u))
      candidates |= closed_[u];
    for (auto w = candidates.find_first(); w != VertexSet::npos; w = candidates.find_next(w))
      max_cover = std::max(max_cover, (closed_[w] & uncovered).count());
    const std::size_t by_cover = (remaining + max_cover - 1) / max_cover;

    // Uncovered vertices with pairwise disjoint closed neighbourhoods need
    // distinct dominators.
    std::size_t packing = 0;
    VertexSet blocked(uncovered.size());
    for (Vertex u : by_degree_) {
      if (!uncovered.test(u) || closed_[u].intersects(blocked)) continue;
      ++packing;
      blocked |= closed_[u];
    }
    return std::max(by_cover, packing);
  }

  void branch(const VertexSet& uncovered, std::size_t chosen) {
    if (uncovered.none()) {
      best_ = std::min(best_, chosen);
      return;
    }
    if (chosen + lower_bound(uncovered) >= best_) return;
    if (++nodes_ > budget_) throw SearchBudgetExceeded(0, best_);

    // The uncovered vertex with the fewest possible dominators.
    Vertex pivot = 0;
    std::size_t fewest = SIZE_MAX;
    for (auto u = uncovered.find_first(); u != VertexSet::npos; u = uncovered.find_next(u)) {
      const std::size_t c = closed_[u].count();
      if (c < fewest) {
        fewest = c;
        pivot = static_cast<Vertex>(u);
      }
    }
    std::vector<std::pair<std::size_t, Vertex>> options;
    const auto& dominators = closed_[pivot];
    for (auto w = dominators.find_first(); w != VertexSet::npos; w = dominators.find_next(w))
      options.emplace_back((closed_[w] & uncovered).count(), static_cast<Vertex>(w));
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [gain, w] : options) {
      branch(uncovered - closed_[w], chosen + 1);
      if (chosen + 1 >= best_) return;
    }
  }

  const std::vector<VertexSet>& closed_;
  std::vector<Vertex> by_degree_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t best_ = SIZE_MAX;
};

}  // namespace

std::vector<Vertex> greedy_dominating_set(const Graph& g) {
  return greedy_cover(closed_neighborhoods(g), g.full_set());
}

std::size_t greedy_domination_upper(const Graph& g) { return greedy_dominating_set(g).size(); }

bool is_dominating_set(const Graph& g, const std::vector<Vertex>& set) {
  VertexSet covered(g.order());
  for (Vertex v : set) covered |= g.closed_neighborhood(v);
  return covered.all();
}

std::size_t domination_number_exact(const Graph& g, const DominationOptions& options) {
  const std::size_t bound = options.limit.value_or(options.max_n);
  if (g.order() > bound) throw BoundExceededError(g.order(), bound);
  const auto closed = closed_neighborhoods(g);
  const auto comps = connected_components(g);
  std::size_t total = 0;
  std::uint64_t used = 0;
  for (std::size_t i = 0; i < comps.count(); ++i) {
    VertexSet target(g.order());
    for (Vertex v : comps.parts[i]) target.set(v);
    DominationSearch search(closed, options.node_budget - used);
    std::size_t root_lower = 0;
    try {
      total += search.solve(target, root_lower);
    } catch (const SearchBudgetExceeded& e) {
      // Finished components are exact, this one contributes its root bounds,
      // the rest at least one vertex each and at most their greedy cover.
      std::size_t lower = total + root_lower, upper = total + e.upper();
      for (std::size_t j = i + 1; j < comps.count(); ++j) {
        VertexSet rest(g.order());
        for (Vertex v : comps.parts[j]) rest.set(v);
        ++lower;
        upper += greedy_cover(closed, rest).size();
      }
      throw SearchBudgetExceeded(lower, upper);
    }
    used += search.nodes();
  }
  return total;
}

// ---------------------------------------------------------------------------
// Vertex connectivity
// ---------------------------------------------------------------------------

namespace {

/// Vertex-split unit-capacity flow network: in(v) = 2v, out(v) = 2v + 1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : nodes_(2 * g.order()), head_(nodes_, -1) {
    for (Vertex v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    const auto big = static_cast<int>(g.order());
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, big);
      add_arc(2 * v + 1, 2 * u, big);
    }
    base_cap_ = cap_;
  }

  std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t limit) {
    cap_ = base_cap_;
    std::size_t flow = 0;
    std::vector<int> via(nodes_);
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<std::size_t> queue{source};
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        auto x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          const auto y = static_cast<std::size_t>(to_[a]);
          if (cap_[a] > 0 && via[y] == -1) {
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[sink] == -1) break;
      for (auto y = sink; y != source;) {
        const int a = via[y];
        --cap_[a];
        ++cap_[a ^ 1];
        y = static_cast<std::size_t>(to_[a ^ 1]);
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(std::size_t from, std::size_t to, int cap) {
    for (int dir = 0; dir < 2; ++dir) {
      const auto a = static_cast<int>(to_.size());
      to_.push_back(static_cast<int>(dir ? from : to));
      cap_.push_back(dir ? 0 : cap);
      const std::size_t tail = dir ? to : from;
      next_.push_back(head_[tail]);
      head_[tail] = a;
    }
  }

  std::size_t nodes_;
  std::vector<int> head_, next_, to_, cap_, base_cap_;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  SplitNetwork net(g);
  return net.max_flow(2 * s + 1, 2 * t, cap);
}

std::size_t vertex_connectivity(const Graph& g, const ConnectivityOptions& options) {
  const std::size_t n = g.order();
  if (n > options.max_n) throw BoundExceededError(n, options.max_n);
  if (n <= 1) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  if (!is_connected(g)) return 0;

  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;
  std::size_t best = g.degree(v);
  SplitNetwork net(g);
  // Either some minimum separator avoids v (then it separates v from a
  // non-neighbour), or v lies in every one (then it separates two neighbours of v).
  for (Vertex u = 0; u < n && best > 0; ++u)
    if (u != v && !g.adjacent(u, v)) best = std::min(best, net.max_flow(2 * v + 1, 2 * u, best));
  const auto nbrs = g.neighbor_list(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j]))
        best = std::min(best, net.max_flow(2 * nbrs[i] + 1, 2 * nbrs[j], best));
  return best;
}

MetricReport metric_report(const Graph& g, const MetricOptions& options) {
  MetricReport r;
  r.dom_vertices = dominating_vertices(g);
  auto comps = connected_components(g);
  r.component_count = comps.count();
  r.components = std::move(comps.parts);
  r.diameter = r.component_count <= 1 ? diameter(g) : std::nullopt;
  try {
    r.domination_number = domination_number_exact(g, options.domination);
  } catch (const BoundExceededError&) {
  } catch (const SearchBudgetExceeded&) {
  }
  try {
    r.vertex_connectivity = vertex_connectivity(g, options.connectivity);
  } catch (const BoundExceededError&) {
  }
  return r;
}

}  // namespace epg
