#include "epg/oracle.hpp"

#include <algorithm>
#include <set>

#include "epg/construct.hpp"
#include "epg/errors.hpp"
#include "epg/metrics.hpp"
#include "epg/number_theory.hpp"
#include "epg/spectrum.hpp"

namespace epg {

using nlohmann::json;

bool AbelianSignature::has_cyclic_sylow() const {
  return std::any_of(exponents.begin(), exponents.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

bool AbelianSignature::is_cyclic() const {
  return std::all_of(exponents.begin(), exponents.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

std::optional<AbelianSignature> abelian_signature(const GroupSpec& spec) {
  AbelianSignature sig;
  for (const Atom& a : spec.factors) {
    const auto* c = std::get_if<Cyclic>(&a);
    if (c == nullptr) return std::nullopt;
    for (auto [p, e] : factorize(c->n)) sig.exponents[p].push_back(e);
  }
  for (auto& [p, exps] : sig.exponents) std::sort(exps.begin(), exps.end());
  return sig;
}

namespace {

std::uint64_t sylow_order(std::uint64_t p, const std::vector<unsigned>& exps) {
  unsigned total = 0;
  for (unsigned e : exps) total += e;
  return ipow(p, total);
}

void require_noncyclic(const AbelianSignature& sig) {
  if (sig.is_cyclic()) throw NotApplicableError("bound is only defined for non-cyclic abelian groups");
}

}  // namespace

std::uint64_t alpha_bound(const AbelianSignature& sig) {
  require_noncyclic(sig);
  std::uint64_t p_min = 1;
  for (const auto& [p, exps] : sig.exponents) p_min *= ipow(p, exps.front());
  return p_min - euler_phi(p_min);
}

std::uint64_t beta_bound(const AbelianSignature& sig) {
  require_noncyclic(sig);
  std::uint64_t cyclic = 1, q = 1;
  for (const auto& [p, exps] : sig.exponents) {
    if (exps.size() == 1) {
      cyclic *= sylow_order(p, exps);
    } else {
      q *= ipow(p, exps.front());
    }
  }
  return cyclic * (q - euler_phi(q));
}

std::optional<DomPrediction> predict_dom_set(const NilpotentProfile& p) {
  if (!p.is_nilpotent) return std::nullopt;
  const std::uint64_t n = p.cyclic_part_order;
  switch (p.case_id) {
    case NilpotentCase::One: return DomPrediction{1, 1};
    case NilpotentCase::Two: return DomPrediction{n, 2};
    case NilpotentCase::Three: return DomPrediction{2, 3};
    case NilpotentCase::Four: return DomPrediction{2 * n, 4};
    default: return std::nullopt;
  }
}

bool predicted_dominating(const NilpotentProfile& p, std::uint64_t element_order) {
  if (gcd(element_order, p.odd_noncyclic_part_order) != 1) return false;
  if (p.quaternion_order && p_part(element_order, 2) > 2) return false;
  return true;
}

namespace {

bool quaternion_case(const NilpotentProfile& p) {
  return p.case_id == NilpotentCase::Three || p.case_id == NilpotentCase::Four;
}

bool plain_case(const NilpotentProfile& p) {
  return p.case_id == NilpotentCase::One || p.case_id == NilpotentCase::Two;
}

}  // namespace

std::optional<bool> predict_proper_connectivity(const NilpotentProfile& p) {
  if (!p.is_nilpotent || p.g1_trivial()) return std::nullopt;
  if (plain_case(p)) return p.noncyclic_primes().size() >= 2;
  return true;
}

std::optional<std::uint64_t> predict_component_count(const NilpotentProfile& p) {
  auto connected = predict_proper_connectivity(p);
  if (!connected) return std::nullopt;
  if (*connected) return 1;
  return p.sylows.at(p.noncyclic_primes().front()).s_p;
}

std::optional<std::uint64_t> predict_domination_number(const NilpotentProfile& p) {
  if (!p.is_nilpotent || p.g1_trivial() || !plain_case(p)) return std::nullopt;
  std::uint64_t best = UINT64_MAX;
  for (auto prime : p.noncyclic_primes()) best = std::min(best, p.sylows.at(prime).s_p);
  return best;
}

DiameterPrediction predict_diameter(const NilpotentProfile& p) {
  if (!p.is_nilpotent || p.g1_trivial()) return {};
  if (plain_case(p)) {
    if (p.noncyclic_primes().size() >= 2) return {BoundKind::Exactly, 3};
    return {};
  }
  return {BoundKind::AtMost, 4};
}

KappaPrediction predict_kappa(const NilpotentProfile& p, std::optional<std::uint64_t> beta) {
  if (!p.is_nilpotent || p.g1_trivial() || !plain_case(p)) return {};
  if (p.g1_is_p_group()) {
    return {BoundKind::Exactly, p.case_id == NilpotentCase::One ? 1 : p.cyclic_part_order};
  }
  if (beta) return {BoundKind::AtMost, *beta};
  return {};
}

std::optional<std::uint64_t> predict_eta_lambda1(const NilpotentProfile& p) {
  if (!p.is_nilpotent || p.g1_trivial()) return std::nullopt;
  if (p.case_id == NilpotentCase::One) return 1;
  if (p.case_id == NilpotentCase::Two) return p.cyclic_part_order;
  return std::nullopt;
}

Prediction predict(const NilpotentProfile& p, const std::optional<AbelianSignature>& sig) {
  Prediction out;
  out.dom = predict_dom_set(p);
  out.proper_connected = predict_proper_connectivity(p);
  out.component_count = predict_component_count(p);
  out.domination_number = predict_domination_number(p);
  out.diameter = predict_diameter(p);
  if (sig && !sig->is_cyclic()) {
    out.alpha = alpha_bound(*sig);
    out.beta = beta_bound(*sig);
  }
  out.kappa = predict_kappa(p, out.beta);
  out.eta_lambda1 = predict_eta_lambda1(p);
  return out;
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::Skipped: return "skipped";
    case RowStatus::Flagged: return "flagged";
    case RowStatus::Unpredicted: return "unpredicted";
  }
  return "?";
}

const ReportRow* VerificationReport::row(const std::string& quantity) const {
  for (const auto& r : rows) {
    if (r.quantity == quantity) return &r;
  }
  return nullptr;
}

std::size_t VerificationReport::count(RowStatus s) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [s](const ReportRow& r) { return r.status == s; }));
}

namespace {

ReportRow compare(std::string quantity, std::string theorem, const json& predicted, const json& computed) {
  ReportRow r{std::move(quantity), predicted, computed, RowStatus::Match, std::move(theorem), {}};
  if (predicted.is_null()) {
    r.status = RowStatus::Unpredicted;
  } else if (predicted != computed) {
    r.status = RowStatus::Mismatch;
  }
  return r;
}

ReportRow skipped(std::string quantity, std::string theorem, json predicted, std::string note) {
  return ReportRow{std::move(quantity), std::move(predicted), nullptr, RowStatus::Skipped, std::move(theorem), std::move(note)};
}

json opt(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

json bound_json(BoundKind kind, std::uint64_t value) {
  switch (kind) {
    case BoundKind::Exactly: return json(value);
    case BoundKind::AtMost: return json{{"at_most", value}};
    case BoundKind::Unknown: break;
  }
  return nullptr;
}

RowStatus bound_status(BoundKind kind, std::uint64_t predicted, std::uint64_t computed) {
  switch (kind) {
    case BoundKind::Exactly: return predicted == computed ? RowStatus::Match : RowStatus::Mismatch;
    case BoundKind::AtMost: return computed <= predicted ? RowStatus::Match : RowStatus::Mismatch;
    case BoundKind::Unknown: break;
  }
  return RowStatus::Unpredicted;
}

void dom_product_row(const Group& g, const std::vector<Vertex>& dom, VerificationReport& report) {
  const auto comps = g.components();
  if (!g.spec() || comps.size() < 2) return;
  std::vector<std::set<std::uint32_t>> factor_dom;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Group f = factor_group(g, i);
    auto d = dominating_vertices(enhanced_power_graph(f));
    factor_dom.emplace_back(d.begin(), d.end());
  }
  bool contained = true;
  for (Vertex v : dom) {
    auto digits = g.digits(v);
    for (std::size_t i = 0; i < digits.size() && contained; ++i) contained = factor_dom[i].count(digits[i]) > 0;
    if (!contained) break;
  }
  report.rows.push_back(compare("dom_product_containment", "dominating set of a direct product", true, contained));
}

}  // namespace

VerificationReport verify(const Group& g, const VerifyOptions& options) {
  VerificationReport report;
  report.group_name = g.name();
  report.order = g.order();
  report.profile = nilpotent_profile(g);
  const NilpotentProfile& prof = report.profile;

  std::optional<AbelianSignature> sig;
  if (g.spec()) sig = abelian_signature(*g.spec());
  const Prediction pred = predict(prof, sig);
  report.alpha = pred.alpha;
  report.beta = pred.beta;

  const Graph ge = enhanced_power_graph(g);
  const auto dom = dominating_vertices(ge);

  report.rows.push_back(compare("dom_size", "dominating set of a nilpotent group",
                                pred.dom ? json(pred.dom->size) : json(nullptr), dom.size()));

  if (prof.is_nilpotent) {
    std::vector<char> in_dom(g.order(), 0);
    for (Vertex v : dom) in_dom[v] = 1;
    std::size_t disagreements = 0;
    for (Element x = 0; x < g.order(); ++x) {
      if (predicted_dominating(prof, g.order_of(x)) != static_cast<bool>(in_dom[x])) ++disagreements;
    }
    report.rows.push_back(compare("dom_membership_disagreements", "dominating set of a nilpotent group", 0, disagreements));
  }
  dom_product_row(g, dom, report);

  const bool cyclic = dom.size() == g.order();
  if (cyclic) {
    const std::string note = "group is cyclic; proper graph is empty";
    report.rows.push_back(skipped("proper_connected", "proper graph connectivity", nullptr, note));
    report.rows.push_back(skipped("component_count", "proper graph components", nullptr, note));
    report.rows.push_back(skipped("domination_number", "proper graph domination number", nullptr, note));
    report.rows.push_back(skipped("diameter", "proper graph diameter", nullptr, note));
  } else {
    const ProperGraph proper = remove_dominating(ge);
    const Components comps = connected_components(proper.graph);
    const bool connected = comps.count() == 1;

    if (pred.proper_connected) {
      report.rows.push_back(compare("proper_connected", "proper graph connectivity", *pred.proper_connected, connected));
    } else if (prof.is_nilpotent && quaternion_case(prof) && prof.g1_trivial()) {
      // Read literally, the prediction is "connected" for trivial G1 as well.
      ReportRow r = compare("proper_connected", "proper graph connectivity", true, connected);
      if (r.status == RowStatus::Mismatch) {
        r.status = RowStatus::Flagged;
        r.note = "G1 is trivial; literal prediction does not hold";
      }
      report.rows.push_back(std::move(r));
    } else {
      report.rows.push_back(compare("proper_connected", "proper graph connectivity", nullptr, connected));
    }

    report.rows.push_back(compare("component_count", "proper graph components", opt(pred.component_count), comps.count()));

    const json gamma_pred = opt(pred.domination_number);
    if (proper.graph.order() > options.max_gamma_n) {
      report.rows.push_back(skipped("domination_number", "proper graph domination number", gamma_pred,
                                    "proper graph exceeds the exact search bound"));
    } else {
      try {
        DominationOptions dopt;
        dopt.limit = options.max_gamma_n;
        dopt.node_budget = options.gamma_node_budget;
        const auto gamma = domination_number_exact(proper.graph, dopt);
        report.rows.push_back(compare("domination_number", "proper graph domination number", gamma_pred, gamma));
      } catch (const SearchBudgetExceeded& e) {
        report.rows.push_back(skipped("domination_number", "proper graph domination number", gamma_pred, e.what()));
      }
    }

    const auto diam = diameter(proper.graph);
    const json diam_json = diam ? json(*diam) : json("infinite");
    ReportRow drow{"diameter", bound_json(pred.diameter.kind, pred.diameter.value), diam_json,
                   RowStatus::Unpredicted, "proper graph diameter", {}};
    if (pred.diameter.kind != BoundKind::Unknown) {
      drow.status = diam ? bound_status(pred.diameter.kind, pred.diameter.value, *diam) : RowStatus::Mismatch;
    }
    report.rows.push_back(std::move(drow));
  }

  const json kappa_pred = bound_json(pred.kappa.kind, pred.kappa.value);
  if (g.order() > options.max_flow_n) {
    report.rows.push_back(skipped("vertex_connectivity", "vertex connectivity", kappa_pred,
                                  "graph exceeds the max-flow bound"));
  } else {
    ConnectivityOptions copt;
    copt.max_n = options.max_flow_n;
    const auto kappa = vertex_connectivity(ge, copt);
    ReportRow r{"vertex_connectivity", kappa_pred, kappa, RowStatus::Unpredicted, "vertex connectivity", {}};
    r.status = bound_status(pred.kappa.kind, pred.kappa.value, kappa);
    report.rows.push_back(std::move(r));
  }

  if (pred.alpha && pred.beta) {
    report.rows.push_back(compare("beta_le_alpha", "connectivity bounds", true, *pred.beta <= *pred.alpha));
  }

  const json eta_pred = opt(pred.eta_lambda1);
  if (g.order() > options.eigen_n) {
    report.rows.push_back(skipped("eta_lambda1", "multiplicity of the spectral radius", eta_pred,
                                  "graph exceeds the exact rank bound"));
  } else {
    report.rows.push_back(compare("eta_lambda1", "multiplicity of the spectral radius", eta_pred,
                                  multiplicity_of_eigenvalue_n(ge)));
  }

  report.all_match = report.count(RowStatus::Mismatch) == 0;
  return report;
}

json to_json(const NilpotentProfile& p) {
  json sylows = json::object();
  for (const auto& [prime, s] : p.sylows) {
    sylows[std::to_string(prime)] = {{"order", s.order},
                                     {"kind", to_string(s.kind)},
                                     {"s_p", s.s_p},
                                     {"max_element_order", s.max_element_order}};
  }
  json out{{"is_nilpotent", p.is_nilpotent}, {"sylows", sylows}};
  if (p.is_nilpotent) {
    out["case"] = case_number(p.case_id);
    out["g1_order"] = p.odd_noncyclic_part_order;
    out["cyclic_part_order"] = p.cyclic_part_order;
    out["quaternion_order"] = opt(p.quaternion_order);
  } else {
    out["case"] = "not_nilpotent";
  }
  return out;
}

json to_json(const VerificationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j{{"quantity", row.quantity},
           {"predicted", row.predicted},
           {"computed", row.computed},
           {"status", to_string(row.status)},
           {"match", row.status == RowStatus::Match},
           {"theorem", row.theorem}};
    if (!row.note.empty()) j["note"] = row.note;
    rows.push_back(std::move(j));
  }
  json out{{"group", r.group_name},
           {"order", r.order},
           {"case", r.profile.is_nilpotent ? json(case_number(r.profile.case_id)) : json("not_nilpotent")},
           {"profile", to_json(r.profile)},
           {"rows", rows},
           {"all_match", r.all_match}};
  if (r.alpha) out["alpha"] = *r.alpha;
  if (r.beta) out["beta"] = *r.beta;
  return out;
}

}  // namespace epg
