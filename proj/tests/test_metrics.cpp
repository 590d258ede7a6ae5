#include <random>

#include "doctest.h"

#include "corpus.hpp"
#include "epg/construct.hpp"
#include "epg/errors.hpp"
#include "epg/metrics.hpp"
#include "oracles.hpp"

using namespace epg;

namespace {

Graph isolated(std::size_t n) { return Graph(n); }

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace

TEST_SUITE("graph_metrics") {
  TEST_CASE("dominating vertices") {
    CHECK(dominating_vertices(complete_graph(4)).size() == 4);
    CHECK(dominating_vertices(star_graph(3)) == std::vector<Vertex>{0});
    const Group q8 = build_group("Q8");
    auto dom = dominating_vertices(enhanced_power_graph(q8));
    REQUIRE(dom.size() == 2);
    CHECK(q8.order_of(dom[0]) == 1);
    CHECK(q8.order_of(dom[1]) == 2);
  }

  TEST_CASE("components and diameter") {
    CHECK(connected_components(cycle_graph(5)).count() == 1);
    CHECK(diameter(cycle_graph(5)) == 2u);
    CHECK(connected_components(proper_enhanced_power_graph(build_group("Z2xZ2")).graph).count() == 3);
    const Graph g = proper_enhanced_power_graph(build_group("Z2xZ2xZ3xZ3")).graph;
    CHECK(is_connected(g));
    CHECK(diameter(g) == 3u);
    CHECK_FALSE(diameter(isolated(2)));
    CHECK(diameter(isolated(1)) == 0u);
    CHECK(diameter(Graph(0)) == 0u);
    CHECK(bfs_distances(path_graph(4), 0) == std::vector<int>{0, 1, 2, 3});
  }

  TEST_CASE("domination number") {
    CHECK(domination_number_exact(star_graph(3)) == 1);
    CHECK(domination_number_exact(isolated(3)) == 3);
    CHECK(domination_number_exact(Graph(0)) == 0);
    CHECK(domination_number_exact(proper_enhanced_power_graph(build_group("Z2xZ4")).graph) == 3);
    CHECK(domination_number_exact(cycle_graph(9)) == 3);
    CHECK_THROWS_AS(domination_number_exact(cycle_graph(50), DominationOptions{40}), BoundExceededError);
    DominationOptions tiny;
    tiny.node_budget = 1;
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(domination_number_exact(oracle::to_graph(oracle::random_matrix(80, 0.08, rng)), tiny),
                    SearchBudgetExceeded);
  }

  TEST_CASE("greedy domination") {
    CHECK(greedy_domination_upper(complete_graph(4)) == 1);
    CHECK(greedy_domination_upper(cycle_graph(5)) == 2);
    CHECK(greedy_domination_upper(proper_enhanced_power_graph(build_group("Z2xZ2")).graph) == 3);
    const Graph c = cycle_graph(11);
    CHECK(is_dominating_set(c, greedy_dominating_set(c)));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
      const Graph g = oracle::to_graph(oracle::random_matrix(5 + t % 20, 0.2, rng));
      CHECK(greedy_domination_upper(g) >= domination_number_exact(g));
    }
    for (std::size_t n = 1; n < 8; ++n) CHECK(greedy_domination_upper(complete_graph(n)) == domination_number_exact(complete_graph(n)));
  }

  TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(complete_graph(4)) == 3);
    CHECK(vertex_connectivity(cycle_graph(5)) == 2);
    CHECK(vertex_connectivity(enhanced_power_graph(build_group("Z2xZ2"))) == 1);
    CHECK(vertex_connectivity(isolated(3)) == 0);
    CHECK(vertex_connectivity(path_graph(5)) == 1);
    CHECK_THROWS_AS(vertex_connectivity(cycle_graph(20), ConnectivityOptions{10}), BoundExceededError);
  }

  TEST_CASE("diameter one exactly for complete graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 80; ++t) {
      const std::size_t n = 2 + t % 9;
      const auto m = oracle::random_matrix(n, 0.5 + 0.05 * (t % 10), rng);
      const Graph g = oracle::to_graph(m);
      const bool complete = g.edge_count() == n * (n - 1) / 2;
      CHECK((diameter(g) == std::optional<std::size_t>(1)) == complete);
      const long expected = oracle::diameter(m);
      if (expected < 0) {
        CHECK_FALSE(diameter(g));
      } else {
        CHECK(diameter(g) == static_cast<std::size_t>(expected));
      }
    }
  }

  TEST_CASE("components survive relabelling; kappa bounds") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 3 + t % 15;
      const auto m = oracle::random_matrix(n, 0.15, rng);
      const Graph g = oracle::to_graph(m);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(connected_components(g).count() == connected_components(relabel(g, perm)).count());
      CHECK(connected_components(g).count() == oracle::components(m));
      const auto kappa = vertex_connectivity(g);
      CHECK((kappa == 0) == !is_connected(g));
      CHECK(kappa <= g.min_degree());
    }
  }

  TEST_CASE("exact searches agree with exhaustive enumeration") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.8);
    for (int t = 0; t < 60; ++t) {
      const auto m = oracle::random_matrix(size(rng), density(rng), rng);
      const Graph g = oracle::to_graph(m);
      CHECK(domination_number_exact(g) == oracle::domination_number(m));
      if (m.size() <= 10) CHECK(vertex_connectivity(g) == oracle::vertex_connectivity(m));
    }
  }

  TEST_CASE("metric report") {
    const Graph g = proper_enhanced_power_graph(build_group("Z2xZ4")).graph;
    const MetricReport r = metric_report(g);
    CHECK(r.component_count == 3);
    CHECK_FALSE(r.diameter);
    CHECK(r.domination_number == 3u);
    CHECK(r.vertex_connectivity == 0u);
    CHECK(r.dom_vertices.empty());
  }
}
