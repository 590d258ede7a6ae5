#include "epg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "epg/construct.hpp"
#include "epg/errors.hpp"
#include "epg/families.hpp"
#include "epg/graph_io.hpp"
#include "epg/metrics.hpp"
#include "epg/nilpotent.hpp"
#include "epg/oracle.hpp"
#include "epg/spectrum.hpp"

namespace epg::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string group;
  std::string table;
  std::string out;
  std::string format = "json";
  std::string kind = "enhanced";
  std::string family;
  std::uint64_t max_order = 20000;
  std::size_t max_flow_n = 300;
  std::size_t max_gamma_n = 400;
  std::size_t eigen_n = 400;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool check_assoc = false;
};

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Group load_group(const Config& c) {
  if (c.group.empty() == c.table.empty()) throw UsageFailure("exactly one of --group or --table is required");
  if (!c.group.empty()) return build_group(c.group, BuildOptions{c.max_order});
  Group g = load_cayley_table(c.table, CayleyOptions{c.check_assoc});
  if (g.order() > c.max_order) throw OrderLimitError("table order exceeds --max-order");
  return g;
}

std::vector<std::string> names_of(const Group& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.element_name(v));
  return out;
}

Graph build_graph(const Group& g, const std::string& kind) {
  if (kind == "enhanced") return enhanced_power_graph(g);
  if (kind == "power") return power_graph(g);
  if (kind == "commuting") return commuting_graph_full(g);
  if (kind == "proper") return proper_enhanced_power_graph(g).graph;
  throw UsageFailure("unknown graph kind '" + kind + "'");
}

std::string render_text(const json& doc) {
  std::ostringstream os;
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) {
      os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  } else {
    os << doc.dump() << '\n';
  }
  return os.str();
}

std::string render_report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.group_name << " (order " << r.order << ", case "
     << (r.profile.is_nilpotent ? std::to_string(case_number(r.profile.case_id)) : "not nilpotent") << ")\n";
  for (const auto& row : r.rows) {
    os << "  " << row.quantity << ": predicted " << row.predicted.dump() << ", computed " << row.computed.dump()
       << " [" << to_string(row.status) << "]";
    if (!row.note.empty()) os << " " << row.note;
    os << '\n';
  }
  os << "  all_match: " << (r.all_match ? "true" : "false") << '\n';
  return os.str();
}

std::string render_document(const json& doc, const Config& c) {
  if (c.format == "json") return doc.dump(2) + "\n";
  if (c.format == "text") return render_text(doc);
  throw UsageFailure("--format " + c.format + " is only available for graph output");
}

std::string render_graph(const Graph& graph, const Group& g, const Config& c, json extra = json::object()) {
  if (c.format == "dot") return to_dot(graph, g.name());
  if (c.format == "edges") return to_edge_list(graph);
  json doc{{"group", g.name()}, {"kind", c.kind}, {"graph", to_json(graph)}};
  doc.update(extra);
  if (c.format == "text") {
    std::ostringstream os;
    os << g.name() << " " << c.kind << " graph: " << graph.order() << " vertices, " << graph.edge_count()
       << " edges\n";
    for (auto [u, v] : graph.edges()) os << graph.label(u) << " -- " << graph.label(v) << '\n';
    return os.str();
  }
  return doc.dump(2) + "\n";
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

std::string cmd_info(const Config& c) {
  const Group g = load_group(c);
  const NilpotentProfile p = nilpotent_profile(g);
  json doc{{"group", g.name()}, {"order", g.order()}, {"is_abelian", g.is_abelian()}};
  doc.update(to_json(p));
  std::map<std::uint32_t, std::size_t> orders;
  for (auto o : g.element_orders()) ++orders[o];
  json hist = json::object();
  for (auto [o, k] : orders) hist[std::to_string(o)] = k;
  doc["element_orders"] = hist;
  return render_document(doc, c);
}

std::string cmd_graph(const Config& c) {
  const Group g = load_group(c);
  return render_graph(build_graph(g, c.kind), g, c);
}

std::string cmd_dom(const Config& c) {
  const Group g = load_group(c);
  const auto dom = dominating_vertices(enhanced_power_graph(g));
  json doc{{"group", g.name()}, {"dom_count", dom.size()}, {"dom", names_of(g, dom)}};
  const NilpotentProfile p = nilpotent_profile(g);
  if (auto pred = predict_dom_set(p)) {
    doc["case"] = pred->case_tag;
    doc["predicted_count"] = pred->size;
  }
  return render_document(doc, c);
}

std::string cmd_proper(Config c) {
  const Group g = load_group(c);
  const ProperGraph proper = proper_enhanced_power_graph(g);
  c.kind = "proper";
  return render_graph(proper.graph, g, c, json{{"removed", names_of(g, proper.removed)}});
}

std::string cmd_metrics(const Config& c) {
  const Group g = load_group(c);
  const Graph graph = build_graph(g, c.kind);
  MetricOptions opt;
  opt.domination.max_n = c.max_gamma_n;
  opt.connectivity.max_n = c.max_flow_n;
  const MetricReport m = metric_report(graph, opt);
  json components = json::array();
  for (const auto& part : m.components) components.push_back(part.size());
  json doc{{"group", g.name()},
           {"kind", c.kind},
           {"n", graph.order()},
           {"edges", graph.edge_count()},
           {"dom_count", m.dom_vertices.size()},
           {"component_count", m.component_count},
           {"component_sizes", components},
           {"diameter", m.diameter ? json(*m.diameter) : json("infinite")},
           {"domination_number", optional_json(m.domination_number)},
           {"vertex_connectivity", optional_json(m.vertex_connectivity)}};
  return render_document(doc, c);
}

std::string cmd_gamma(const Config& c) {
  const Group g = load_group(c);
  const Graph graph = c.kind == "enhanced" ? proper_enhanced_power_graph(g).graph : build_graph(g, c.kind);
  DominationOptions opt;
  opt.max_n = c.max_gamma_n;
  const std::size_t gamma = domination_number_exact(graph, opt);
  json doc{{"group", g.name()}, {"n", graph.order()}, {"domination_number", gamma}};
  if (c.kind == "enhanced") {
    doc["graph"] = "proper";
    if (auto pred = predict_domination_number(nilpotent_profile(g))) doc["predicted"] = *pred;
  }
  return render_document(doc, c);
}

std::string cmd_kappa(const Config& c) {
  const Group g = load_group(c);
  const Graph graph = build_graph(g, c.kind);
  ConnectivityOptions opt;
  opt.max_n = c.max_flow_n;
  json doc{{"group", g.name()}, {"kind", c.kind}, {"n", graph.order()}, {"vertex_connectivity", vertex_connectivity(graph, opt)}};
  return render_document(doc, c);
}

std::string cmd_bounds(const Config& c) {
  if (c.group.empty() || !c.table.empty()) throw UsageFailure("bounds needs --group (a spec of cyclic factors)");
  const GroupSpec spec = parse_group_spec(c.group);
  const auto sig = abelian_signature(spec);
  if (!sig) throw NotApplicableError("bounds need an abelian spec made of cyclic factors");
  json doc{{"group", to_string(spec)}, {"alpha", alpha_bound(*sig)}, {"beta", beta_bound(*sig)}};
  return render_document(doc, c);
}

std::string cmd_spectrum(const Config& c) {
  const Group g = load_group(c);
  const Graph graph = build_graph(g, c.kind);
  if (graph.order() > c.eigen_n) {
    throw BoundExceededError(graph.order(), c.eigen_n);
  }
  SpectrumOptions opt;
  opt.max_n = c.eigen_n;
  json doc{{"group", g.name()}, {"kind", c.kind}};
  doc.update(to_json(spectrum_report(graph, opt)));
  return render_document(doc, c);
}

VerifyOptions verify_options(const Config& c) {
  VerifyOptions v;
  v.max_flow_n = c.max_flow_n;
  v.max_gamma_n = c.max_gamma_n;
  v.eigen_n = c.eigen_n;
  return v;
}

std::string cmd_verify(const Config& c, int& status) {
  const Group g = load_group(c);
  const VerificationReport r = verify(g, verify_options(c));
  if (!r.all_match) status = VerifyMismatch;
  if (c.format == "text") return render_report_text(r);
  return render_document(to_json(r), c);
}

std::string cmd_sweep(const Config& c, int& status) {
  if (c.family.empty()) throw UsageFailure("sweep needs --family");
  SweepOptions opt;
  opt.verify = verify_options(c);
  opt.build.max_order = c.max_order;
  opt.workers = c.workers;
  const SweepResult result = sweep(parse_family(c.family), opt);
  if (result.mismatches() > 0) status = VerifyMismatch;
  std::ostringstream summary;
  summary << result.entries.size() << " groups, " << result.mismatches() << " with mismatches, "
          << result.failures() << " failed";
  if (c.format == "text") {
    std::ostringstream os;
    for (const auto& e : result.entries) {
      if (e.report) {
        os << render_report_text(*e.report);
      } else {
        os << e.group << ": error: " << e.error << '\n';
      }
    }
    os << summary.str() << '\n';
    return os.str();
  }
  json doc = to_json(result);
  doc["family"] = c.family;
  doc["summary"] = summary.str();
  return render_document(doc, c);
}

void add_common(CLI::App* sub, Config& c, bool needs_group = true) {
  if (needs_group) {
    sub->add_option("--group", c.group, "group spec, e.g. Z2xZ4 or Z3xZ3xQ8");
    sub->add_option("--table", c.table, "path to a JSON Cayley table");
    sub->add_flag("--check-assoc", c.check_assoc, "verify associativity of --table (O(n^3))");
  }
  sub->add_option("--out", c.out, "write the artifact to this file instead of stdout");
  sub->add_option("--format", c.format, "json | dot | edges | text")
      ->check(CLI::IsMember({"json", "dot", "edges", "text"}));
  sub->add_option("--max-order", c.max_order, "largest group order to build")->check(CLI::PositiveNumber);
  sub->add_option("--max-flow-n", c.max_flow_n, "vertex bound for max-flow connectivity")->check(CLI::PositiveNumber);
  sub->add_option("--max-gamma-n", c.max_gamma_n, "vertex bound for exact domination")->check(CLI::PositiveNumber);
  sub->add_option("--eigen-n", c.eigen_n, "vertex bound for spectral computations")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "seed for randomized corpora");
}

void add_kind(CLI::App* sub, Config& c) {
  sub->add_option("--kind", c.kind, "enhanced | power | commuting | proper")
      ->check(CLI::IsMember({"enhanced", "power", "commuting", "proper"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Enhanced power graphs of finite groups", "epg"};
  app.require_subcommand(1, 1);

  auto* info = app.add_subcommand("info", "group order, nilpotent case and Sylow structure");
  auto* graph = app.add_subcommand("graph", "emit a graph on the group elements");
  auto* dom = app.add_subcommand("dom", "dominating vertices of the enhanced power graph");
  auto* proper = app.add_subcommand("proper", "enhanced power graph minus its dominating vertices");
  auto* metrics = app.add_subcommand("metrics", "components, diameter, domination number, connectivity");
  auto* gamma = app.add_subcommand("gamma", "exact domination number of the proper graph");
  auto* kappa = app.add_subcommand("kappa", "vertex connectivity of the enhanced power graph");
  auto* bounds = app.add_subcommand("bounds", "alpha/beta connectivity bounds of an abelian spec");
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum summary");
  auto* verifyc = app.add_subcommand("verify", "compare closed-form predictions with brute force");
  auto* sweepc = app.add_subcommand("sweep", "verify every group of a family");

  for (auto* sub : {info, graph, dom, proper, metrics, gamma, kappa, spectrum, verifyc}) add_common(sub, c);
  add_common(bounds, c);
  add_common(sweepc, c, false);
  for (auto* sub : {graph, metrics, gamma, kappa, spectrum}) add_kind(sub, c);
  sweepc->add_option("--family", c.family, "abelian-p:<p>:<maxorder> | pool:<atom,atom,...>:<maxorder>")->required();
  sweepc->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  app.footer(
      "Group spec grammar: atom (\"x\" atom)*, atom := Z<n> | Q<2^k, k>=3> | D<2m, m>=3>.\n"
      "Exit codes: 0 ok, 1 computation error, 2 usage error, 3 verify mismatch.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return UsageError;
  }

  int status = Ok;
  std::string artifact;
  try {
    if (info->parsed()) artifact = cmd_info(c);
    else if (graph->parsed()) artifact = cmd_graph(c);
    else if (dom->parsed()) artifact = cmd_dom(c);
    else if (proper->parsed()) artifact = cmd_proper(c);
    else if (metrics->parsed()) artifact = cmd_metrics(c);
    else if (gamma->parsed()) artifact = cmd_gamma(c);
    else if (kappa->parsed()) artifact = cmd_kappa(c);
    else if (bounds->parsed()) artifact = cmd_bounds(c);
    else if (spectrum->parsed()) artifact = cmd_spectrum(c);
    else if (verifyc->parsed()) artifact = cmd_verify(c, status);
    else if (sweepc->parsed()) artifact = cmd_sweep(c, status);
  } catch (const UsageFailure& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return UsageError;
  } catch (const SpecSyntaxError& e) {
    err << "usage error: " << e.what() << "\n" << app.get_footer() << "\n";
    return UsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ComputationError;
  }

  if (c.out.empty()) {
    out << artifact;
  } else {
    std::ofstream file(c.out);
    if (!file || !(file << artifact)) {
      err << "error: cannot write " << c.out << "\n";
      return ComputationError;
    }
  }
  return status;
}

}  // namespace epg::cli
