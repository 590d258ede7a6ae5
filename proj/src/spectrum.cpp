#include "epg/spectrum.hpp"

#include "epg/construct.hpp"
#include "epg/metrics.hpp"

namespace epg {

std::size_t multiplicity_of_eigenvalue_n(const Graph& g) {
  const auto n = static_cast<long>(g.order());
  DenseMatrix<BigInt> m = laplacian<long>(g).cast<BigInt>();
  for (long i = 0; i < n; ++i) m(i, i) -= n;
  return static_cast<std::size_t>(n - bareiss_rank(m));
}

std::size_t multiplicity_of_eigenvalue_zero(const Graph& g) {
  const DenseMatrix<BigInt> m = laplacian<long>(g).cast<BigInt>();
  return g.order() - static_cast<std::size_t>(bareiss_rank(m));
}

Eigen::VectorXd laplacian_spectrum(const Graph& g, const SpectrumOptions& options) {
  if (g.order() > options.max_n) throw BoundExceededError(g.order(), options.max_n);
  return jacobi_eigenvalues(laplacian<double>(g), options.tol, options.max_sweeps).eigenvalues;
}

std::size_t spectral_radius_multiplicity(const Graph& g, const SpectrumOptions& options) {
  if (g.order() <= 1) return g.order();
  if (!dominating_vertices(g).empty()) return multiplicity_of_eigenvalue_n(g);
  const auto values = laplacian_spectrum(g, options);
  return count_near(values, values(0), options.group_tol);
}

EtaCheck check_eta_theorem(const Graph& g, const SpectrumOptions& options) {
  EtaCheck c;
  const std::size_t n = g.order();
  c.applicable = n >= 3;
  c.dom_count = dominating_vertices(g).size();
  c.has_dominating = c.dom_count > 0;
  c.non_complete = g.edge_count() < n * (n - 1) / 2;
  c.complement_core_connected = is_connected(remove_isolated(complement(g)));
  c.hypotheses = c.non_complete && c.complement_core_connected && c.has_dominating;
  c.eta = spectral_radius_multiplicity(g, options);
  c.eta_equals_dom = c.eta == c.dom_count;
  c.consistent = !c.applicable || (c.hypotheses == c.eta_equals_dom);
  return c;
}

JoinCheck check_join_relation(const Graph& g, const SpectrumOptions& options) {
  const auto dom = dominating_vertices(g);
  const std::size_t n = g.order();
  if (dom.empty()) throw NotApplicableError("join relation needs at least one dominating vertex");
  if (dom.size() >= n) throw NotApplicableError("join relation needs a non-dominating vertex");
  JoinCheck c;
  c.r = dom.size();
  const auto values = laplacian_spectrum(g, options);
  const auto rest = remove_dominating(g).graph;
  const auto rest_values = laplacian_spectrum(rest, options);
  const auto r = static_cast<Eigen::Index>(c.r);
  c.top_equal_n = (values.head(r).array() - static_cast<double>(n)).abs().maxCoeff() < options.group_tol;
  c.lambda_r_plus_1 = values(r);
  c.rest_lambda_1 = rest_values(0);
  c.holds = c.top_equal_n &&
            std::abs(c.lambda_r_plus_1 - (c.rest_lambda_1 + static_cast<double>(c.r))) < options.group_tol;
  return c;
}

SpectrumReport spectrum_report(const Graph& g, const SpectrumOptions& options) {
  SpectrumReport r;
  r.n = g.order();
  r.dom_count = dominating_vertices(g).size();
  r.mult_of_n = multiplicity_of_eigenvalue_n(g);
  if (g.order() <= options.max_n) r.eigenvalues = laplacian_spectrum(g, options);
  if (r.n <= 1) {
    r.eta_lambda1 = r.n;
  } else if (r.dom_count > 0) {
    r.eta_lambda1 = r.mult_of_n;
  } else if (r.eigenvalues.size() > 0) {
    r.eta_lambda1 = count_near(r.eigenvalues, r.eigenvalues(0), options.group_tol);
  } else {
    throw BoundExceededError(g.order(), options.max_n);
  }
  return r;
}

nlohmann::json to_json(const SpectrumReport& r) {
  nlohmann::json top = nlohmann::json::array();
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(10, r.eigenvalues.size()); ++i) {
    // Round away Jacobi noise so repeated runs print identically.
    top.push_back(std::round(r.eigenvalues(i) * 1e9) / 1e9);
  }
  return {{"n", r.n},
          {"mult_of_n", r.mult_of_n},
          {"eta_lambda1", r.eta_lambda1},
          {"dom_count", r.dom_count},
          {"top_eigenvalues", std::move(top)}};
}

}  // namespace epg
