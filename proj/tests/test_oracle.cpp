#include <algorithm>
#include <random>

#include "doctest.h"

#include "corpus.hpp"
#include "epg/construct.hpp"
#include "epg/errors.hpp"
#include "epg/families.hpp"
#include "epg/metrics.hpp"
#include "epg/nilpotent.hpp"
#include "epg/number_theory.hpp"
#include "epg/oracle.hpp"
#include "oracles.hpp"

using namespace epg;

namespace {

NilpotentProfile profile(const char* spec) { return nilpotent_profile(build_group(spec)); }

AbelianSignature signature(const char* spec) { return *abelian_signature(parse_group_spec(spec)); }

GroupSpec random_abelian(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> factors(1, 5), prime(0, 5), exponent(1, 3);
  GroupSpec spec;
  const int k = factors(rng);
  for (int i = 0; i < k; ++i) spec.factors.push_back(Cyclic{ipow(primes[prime(rng)], static_cast<unsigned>(exponent(rng)))});
  return spec;
}

}  // namespace

TEST_SUITE("theorem_oracle") {
  TEST_CASE("dominating set predictions") {
    CHECK(predict_dom_set(profile("Z2xZ2"))->size == 1);
    CHECK(predict_dom_set(profile("Z2xZ2xZ9"))->size == 9);
    CHECK(predict_dom_set(profile("Z3xZ3xZ5xQ8"))->size == 10);
    CHECK(predict_dom_set(profile("Q8"))->size == 2);
    CHECK_FALSE(predict_dom_set(profile("D12")));
    CHECK(dominating_vertices(enhanced_power_graph(build_group("Z3xZ3xZ5xQ8"))).size() == 10);
  }

  TEST_CASE("connectivity predictions") {
    CHECK(predict_proper_connectivity(profile("Z2xZ4")) == false);
    CHECK(predict_proper_connectivity(profile("Z2xZ2xZ3xZ3")) == true);
    CHECK(predict_proper_connectivity(profile("Z3xZ3xQ8")) == true);
    CHECK_FALSE(predict_proper_connectivity(profile("Q8")));
    CHECK_FALSE(predict_proper_connectivity(profile("D12")));
  }

  TEST_CASE("component predictions") {
    CHECK(predict_component_count(profile("Z2xZ2")) == 3u);
    CHECK(predict_component_count(profile("Z3xZ3xZ3")) == 13u);
    CHECK(predict_component_count(profile("D16")) == 9u);
    CHECK(connected_components(proper_enhanced_power_graph(build_group("D16")).graph).count() == 9);
  }

  TEST_CASE("domination predictions") {
    CHECK(predict_domination_number(profile("Z2xZ4")) == 3u);
    CHECK(predict_domination_number(profile("Z2xZ2xZ3xZ3")) == 3u);
    CHECK(predict_domination_number(profile("Z2xZ2xZ3xZ3xZ5")) == 3u);
    CHECK(domination_number_exact(proper_enhanced_power_graph(build_group("Z2xZ2xZ3xZ3xZ5")).graph) == 3);
    CHECK_FALSE(predict_domination_number(profile("Z3xZ3xQ8")));
  }

  TEST_CASE("domination prediction ignores factor order") {
    const std::vector<std::string> atoms{"Z2xZ2", "Z3xZ3", "Z5xZ5"};
    std::vector<std::size_t> idx{0, 1, 2};
    std::optional<std::uint64_t> first;
    do {
      std::string spec = atoms[idx[0]] + "x" + atoms[idx[1]] + "x" + atoms[idx[2]];
      const auto p = nilpotent_profile(build_group(spec, BuildOptions{1000}));
      const auto gamma = predict_domination_number(p);
      REQUIRE(gamma);
      if (!first) first = gamma;
      CHECK(*gamma == *first);
    } while (std::next_permutation(idx.begin(), idx.end()));
    CHECK(*first == 3);
  }

  TEST_CASE("diameter predictions") {
    auto d = predict_diameter(profile("Z2xZ2xZ3xZ3"));
    CHECK(d.kind == BoundKind::Exactly);
    CHECK(d.value == 3);
    d = predict_diameter(profile("Z3xZ3xQ8"));
    CHECK(d.kind == BoundKind::AtMost);
    CHECK(d.value == 4);
    CHECK(predict_diameter(profile("Z3xZ3xZ5xQ8")).kind == BoundKind::AtMost);
    CHECK(predict_diameter(profile("Z2xZ4")).kind == BoundKind::Unknown);
  }

  TEST_CASE("alpha and beta") {
    const auto example = signature("Z3xZ9xZ5xZ25xZ7xZ49xZ13");
    CHECK(alpha_bound(example) == 789);
    CHECK(beta_bound(example) == 13 * (105 - 48));
    CHECK(alpha_bound(signature("Z2xZ2xZ3xZ3")) == 4);
    CHECK(beta_bound(signature("Z2xZ2xZ3xZ3")) == 4);
    CHECK(beta_bound(signature("Z2xZ2xZ3")) == 3);
    CHECK_THROWS_AS(alpha_bound(signature("Z4xZ9")), NotApplicableError);
    CHECK_FALSE(abelian_signature(parse_group_spec("Z2xQ8")));
  }

  TEST_CASE("beta bounds kappa from above") {
    for (const char* spec : {"Z2xZ2xZ3", "Z2xZ2xZ5", "Z2xZ2xZ3xZ3", "Z2xZ4xZ3", "Z3xZ3xZ2", "Z2xZ2xZ2xZ3", "Z3xZ3xZ5"}) {
      const Group g = build_group(spec);
      const auto kappa = vertex_connectivity(enhanced_power_graph(g));
      const auto beta = beta_bound(*abelian_signature(*g.spec()));
      CHECK_MESSAGE(kappa <= beta, spec);
      if (g.order() <= 20) CHECK(oracle::vertex_connectivity(oracle::enhanced(g)) == kappa);
    }
  }

  TEST_CASE("beta never exceeds alpha; equal exactly without cyclic Sylows") {
    std::mt19937_64 rng(12345);
    int checked = 0;
    while (checked < 100) {
      const GroupSpec spec = random_abelian(rng);
      const auto sig = *abelian_signature(spec);
      if (sig.is_cyclic()) continue;
      ++checked;
      const auto a = alpha_bound(sig), b = beta_bound(sig);
      CHECK(b <= a);
      CHECK((a == b) == !sig.has_cyclic_sylow());
    }
  }

  TEST_CASE("kappa predictions") {
    auto k = predict_kappa(profile("Z2xZ2"));
    CHECK(k.kind == BoundKind::Exactly);
    CHECK(k.value == 1);
    k = predict_kappa(profile("Z2xZ2xZ3"));
    CHECK(k.kind == BoundKind::Exactly);
    CHECK(k.value == 3);
    k = predict_kappa(profile("Z2xZ2xZ3xZ3"), 4);
    CHECK(k.kind == BoundKind::AtMost);
    CHECK(k.value == 4);
    CHECK(predict_kappa(profile("Z2xZ2xZ3xZ3")).kind == BoundKind::Unknown);
  }

  TEST_CASE("verify reports") {
    const auto r = verify(build_group("Z2xZ4"));
    CHECK(r.all_match);
    CHECK(r.row("dom_size")->computed == 1);
    CHECK(r.row("component_count")->computed == 3);
    CHECK(r.row("domination_number")->computed == 3);
    CHECK(r.row("vertex_connectivity")->computed == 1);

    const auto s = verify(build_group("Z2xZ2xZ3"));
    CHECK(s.all_match);
    for (const char* q : {"dom_size", "component_count", "domination_number", "vertex_connectivity", "eta_lambda1"}) {
      CHECK(s.row(q)->computed == 3);
      CHECK(s.row(q)->status == RowStatus::Match);
    }

    const auto q8 = verify(build_group("Q8"));
    CHECK(q8.all_match);
    CHECK(q8.row("dom_size")->status == RowStatus::Match);
    CHECK(q8.row("proper_connected")->status == RowStatus::Flagged);
    CHECK(q8.row("component_count")->computed == 3);

    const auto z6 = verify(build_group("Z6"));
    CHECK(z6.all_match);
    CHECK(z6.row("proper_connected")->status == RowStatus::Skipped);

    VerifyOptions tight;
    tight.max_flow_n = 4;
    tight.max_gamma_n = 2;
    const auto skipped = verify(build_group("Z2xZ4"), tight);
    CHECK(skipped.all_match);
    CHECK(skipped.row("vertex_connectivity")->status == RowStatus::Skipped);
    CHECK(skipped.row("domination_number")->status == RowStatus::Skipped);

    const auto j = to_json(verify(build_group("Z2xZ4")));
    CHECK(j["all_match"] == true);
    CHECK(j["case"] == 1);
    CHECK(j["rows"].size() > 5);
  }

  TEST_CASE("non-nilpotent groups are brute force only") {
    const auto r = verify(build_group("D12"));
    CHECK(r.all_match);
    CHECK(r.count(RowStatus::Match) + r.count(RowStatus::Skipped) == 0);
  }

  TEST_CASE("cyclic factors always dominate in coprime products") {
    for (const auto& spec : corpus::products()) {
      const auto& last = spec.factors.back();
      const auto* z = std::get_if<Cyclic>(&last);
      if (!z || spec.factors.size() < 2) continue;
      const Group g = build_group(spec);
      if (std::gcd(z->n, g.order() / z->n) != 1) continue;
      auto dom = dominating_vertices(enhanced_power_graph(g));
      std::vector<char> in(g.order());
      for (auto v : dom) in[v] = 1;
      for (std::uint32_t a = 0; a < z->n; ++a) CHECK_MESSAGE(in[a], to_string(spec));  // (e, a) has index a
    }
  }

  TEST_CASE("removing S x Z_n leaves at least as many components as removing S") {
    std::mt19937_64 rng(8);
    for (const char* base : {"Z2xZ2", "Z3xZ3", "Z2xZ4", "D8"}) {
      for (std::uint64_t n : {3, 5}) {
        const Group g1 = build_group(base);
        if (std::gcd(n, g1.order()) != 1) continue;
        const Group g = build_group(parse_group_spec(base) * GroupSpec{{Cyclic{n}}});
        const auto m1 = oracle::enhanced(g1);
        const auto m = oracle::enhanced(g);
        std::bernoulli_distribution pick(0.3);
        for (int t = 0; t < 30; ++t) {
          std::vector<char> s(g1.order()), sxn(g.order());
          s[0] = 1;  // keep the identity out so the separator is non-trivial
          for (std::size_t x = 1; x < g1.order(); ++x) s[x] = pick(rng);
          for (std::size_t x = 0; x < g.order(); ++x) sxn[x] = s[x / n];
          CHECK(oracle::components(m, sxn) >= oracle::components(m1, s));
        }
      }
    }
  }

  TEST_CASE("case 1 and 2 predictions match brute force up to order 600") {
    for (const auto& spec : abelian_groups(600)) {
      const Group g = build_group(spec);
      const auto p = nilpotent_profile(g);
      if (p.g1_trivial()) continue;
      REQUIRE((p.case_id == NilpotentCase::One || p.case_id == NilpotentCase::Two));
      const ProperGraph proper = remove_dominating(enhanced_power_graph(g));
      const Components comps = connected_components(proper.graph);
      CHECK_MESSAGE(*predict_proper_connectivity(p) == (comps.count() == 1), to_string(spec));
      CHECK_MESSAGE(*predict_component_count(p) == comps.count(), to_string(spec));
      if (proper.graph.order() <= 200) {
        CHECK_MESSAGE(*predict_domination_number(p) == domination_number_exact(proper.graph), to_string(spec));
      }
    }
  }
}

TEST_SUITE("families") {
  TEST_CASE("partitions") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(7).size() == 15);
    CHECK(partitions(1) == std::vector<std::vector<unsigned>>{{1}});
  }

  TEST_CASE("abelian p-groups") {
    CHECK(abelian_p_groups(2, 32).size() == 18);
    CHECK(abelian_p_groups(3, 27).size() == 6);
    CHECK(to_string(abelian_p_groups(2, 4)[1]) == "Z2xZ2");
    CHECK_THROWS_AS(abelian_p_groups(4, 64), SpecSyntaxError);
  }

  TEST_CASE("all abelian groups") {
    const auto groups = abelian_groups(16);
    // a(n) for n = 2..16
    CHECK(groups.size() == 1 + 1 + 2 + 1 + 1 + 1 + 3 + 2 + 1 + 1 + 2 + 1 + 1 + 1 + 5);
    std::set<std::string> names;
    for (const auto& g : groups) names.insert(to_string(g));
    CHECK(names.size() == groups.size());
    CHECK(names.count("Z2xZ2xZ3"));
  }

  TEST_CASE("pool products and descriptors") {
    const auto pool = pool_products({Cyclic{2}, Quaternion{8}}, 32);
    std::set<std::string> names;
    for (const auto& g : pool) names.insert(to_string(g));
    CHECK(names == std::set<std::string>{"Z2", "Z2xZ2", "Z2xZ2xZ2", "Z2xZ2xZ2xZ2", "Z2xZ2xZ2xZ2xZ2", "Z2xZ2xQ8", "Z2xQ8",
                                         "Q8"});
    CHECK(parse_family("abelian-p:2:32").size() == 18);
    CHECK(parse_family("pool:Z2,Q8:32").size() == pool.size());
    CHECK_THROWS_AS(parse_family("pool:Z2,Q12:32"), SpecSyntaxError);
    CHECK_THROWS_AS(parse_family("abelian-p:2"), SpecSyntaxError);
    CHECK_THROWS_AS(parse_family("cubes:2:8"), SpecSyntaxError);
  }

  TEST_CASE("sweeps") {
    const auto result = sweep(parse_family("abelian-p:2:32"));
    CHECK(result.entries.size() == 18);
    CHECK(result.mismatches() == 0);
    CHECK(result.failures() == 0);
    CHECK(std::is_sorted(result.entries.begin(), result.entries.end(),
                         [](const SweepEntry& a, const SweepEntry& b) { return a.group < b.group; }));

    SweepOptions parallel;
    parallel.workers = 3;
    CHECK(to_json(sweep(parse_family("abelian-p:2:32"), parallel)) == to_json(result));
  }

  TEST_CASE("p^2 x q^2 sweeps give min(s_p, s_q)") {
    for (std::uint64_t p : {2, 3, 5}) {
      for (std::uint64_t q : {3, 5, 7}) {
        if (q <= p) continue;
        GroupSpec spec{{Cyclic{p}, Cyclic{p}, Cyclic{q}, Cyclic{q}}};
        VerifyOptions opt;
        opt.max_gamma_n = 2500;
        opt.max_flow_n = 1;
        opt.eigen_n = 1;
        const auto r = verify(build_group(spec), opt);
        CHECK(r.all_match);
        const auto* row = r.row("domination_number");
        CHECK(row->status == RowStatus::Match);
        CHECK(row->computed == std::min(p + 1, q + 1));
      }
    }
  }

  TEST_CASE("quaternion-only members are flagged, not failed") {
    const auto result = sweep(parse_family("pool:Q8,Q16:16"));
    CHECK(result.entries.size() == 2);
    for (const auto& e : result.entries) {
      REQUIRE(e.report);
      CHECK(e.report->all_match);
      CHECK(e.report->row("proper_connected")->status == RowStatus::Flagged);
    }
    const auto bad = sweep({GroupSpec{{Cyclic{200}, Cyclic{200}}}});
    CHECK(bad.failures() == 1);
    CHECK_FALSE(bad.entries[0].error.empty());
  }
}
