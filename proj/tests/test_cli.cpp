#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "epg/cli.hpp"
#include "epg/construct.hpp"
#include "epg/graph_io.hpp"
#include "json.hpp"
#include "oracles.hpp"

using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "epg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = epg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("epg_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("info") {
    const auto r = run({"info", "--group", "Z3xZ9xQ16"});
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["order"] == 432);
    CHECK(j["case"] == 3);
    CHECK(j["sylows"]["2"]["kind"] == "generalized_quaternion");
    CHECK(j["sylows"]["3"]["kind"] == "other");
  }

  TEST_CASE("bounds") {
    const auto r = run({"bounds", "--group", "Z3xZ9xZ5xZ25xZ7xZ49xZ13"});
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["alpha"] == 789);
    CHECK(j["beta"] == 741);
    CHECK(run({"bounds", "--group", "Z12"}).status == 1);
    CHECK(run({"bounds", "--group", "Z2xQ8"}).status == 1);
  }

  TEST_CASE("verify") {
    const auto r = run({"verify", "--group", "Z2xZ4"});
    CHECK(r.status == 0);
    CHECK(json::parse(r.out)["all_match"] == true);
    const auto text = run({"verify", "--group", "Q8", "--format", "text"});
    CHECK(text.status == 0);
    CHECK(text.out.find("flagged") != std::string::npos);
  }

  TEST_CASE("usage and computation errors") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"info"}).status == 2);
    CHECK(run({"info", "--group", "Z2", "--table", "x.json"}).status == 2);
    const auto bad = run({"info", "--group", "Q12"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("position") != std::string::npos);
    CHECK(run({"info", "--group", "Z4", "--format", "dot"}).status == 2);
    CHECK(run({"info", "--group", "Z4", "--max-order", "0"}).status == 2);
    CHECK(run({"info", "--group", "Z200xZ200"}).status == 1);
    CHECK(run({"proper", "--group", "Z6"}).status == 1);
    CHECK(run({"gamma", "--group", "Z2xZ2xZ2xZ2xZ3xZ3", "--max-gamma-n", "10"}).status == 1);
    CHECK(run({"info", "--table", "/nonexistent/table.json"}).status == 1);
    CHECK(run({"sweep"}).status == 2);
    CHECK(run({"sweep", "--family", "nope"}).status == 2);
    CHECK(run({"--help"}).status == 0);
  }

  TEST_CASE("graph formats round trip") {
    const epg::Graph expected = epg::enhanced_power_graph(epg::build_group("Z2xQ8"));
    const auto dot = run({"graph", "--group", "Z2xQ8", "--format", "dot"});
    REQUIRE(dot.status == 0);
    CHECK(epg::parse_dot(dot.out).same_adjacency(expected));
    const auto edges = run({"graph", "--group", "Z2xQ8", "--format", "edges"});
    CHECK(epg::parse_edge_list(edges.out).same_adjacency(expected));
    const auto js = run({"graph", "--group", "Z2xQ8"});
    CHECK(epg::graph_from_json(json::parse(js.out)["graph"]).same_adjacency(expected));

    const auto power = run({"graph", "--group", "Z2xQ8", "--kind", "power", "--format", "edges"});
    CHECK(epg::parse_edge_list(power.out).same_adjacency(epg::power_graph(epg::build_group("Z2xQ8"))));
    const auto proper = run({"proper", "--group", "Q8", "--format", "edges"});
    CHECK(epg::parse_edge_list(proper.out).edge_count() == 3);
  }

  TEST_CASE("other commands") {
    auto j = json::parse(run({"dom", "--group", "Z2xZ2xZ3"}).out);
    CHECK(j["dom_count"] == 3);
    CHECK(j["predicted_count"] == 3);
    j = json::parse(run({"metrics", "--group", "Z2xZ4", "--kind", "proper"}).out);
    CHECK(j["component_count"] == 3);
    CHECK(j["diameter"] == "infinite");
    CHECK(j["domination_number"] == 3);
    j = json::parse(run({"gamma", "--group", "Z2xZ2xZ3xZ3"}).out);
    CHECK(j["domination_number"] == 3);
    CHECK(j["predicted"] == 3);
    j = json::parse(run({"kappa", "--group", "Z2xZ2xZ3"}).out);
    CHECK(j["vertex_connectivity"] == 3);
    j = json::parse(run({"spectrum", "--group", "Z2xZ2xZ3"}).out);
    CHECK(j["mult_of_n"] == 3);
    CHECK(j["eta_lambda1"] == 3);
    const auto text = run({"info", "--group", "Z4", "--format", "text"});
    CHECK(text.out.find("order: 4") != std::string::npos);
  }

  TEST_CASE("sweep") {
    const auto r = run({"sweep", "--family", "abelian-p:2:32"});
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["groups"] == 18);
    CHECK(j["mismatches"] == 0);
    const auto flagged = run({"sweep", "--family", "pool:Q8,Q16:16", "--format", "text"});
    CHECK(flagged.status == 0);
    CHECK(flagged.out.find("2 groups, 0 with mismatches") != std::string::npos);
  }

  TEST_CASE("cayley tables and --out") {
    const auto table_path = temp_path("s3.json");
    {
      std::ofstream f(table_path);
      f << json{{"order", 6}, {"table", oracle::symmetric_table(3)}}.dump();
    }
    const auto out_path = temp_path("s3_info.json");
    const auto r = run({"info", "--table", table_path.string(), "--check-assoc", "--out", out_path.string()});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(out_path);
    const json j = json::parse(in);
    CHECK(j["order"] == 6);
    CHECK(j["is_nilpotent"] == false);
    std::filesystem::remove(table_path);
    std::filesystem::remove(out_path);
  }

  TEST_CASE("identical invocations give identical bytes") {
    for (std::vector<std::string> args : {std::vector<std::string>{"verify", "--group", "Z2xZ2xZ3xZ3"},
                                          std::vector<std::string>{"sweep", "--family", "pool:Z2,Z3,Q8:48", "--workers", "2"},
                                          std::vector<std::string>{"graph", "--group", "D8xZ3", "--format", "dot"}}) {
      CHECK(run(args).out == run(args).out);
    }
  }
}
