#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "epg/group.hpp"
#include "epg/nilpotent.hpp"

namespace epg {

/// Exponent multiset per prime of an abelian group given as a product of
/// cyclic atoms, e.g. Z3xZ9xZ13 -> {3: [1, 2], 13: [1]}.
struct AbelianSignature {
  std::map<std::uint64_t, std::vector<unsigned>> exponents;  // ascending per prime

  bool has_cyclic_sylow() const;
  bool is_cyclic() const;
};

/// nullopt unless every atom is cyclic.
std::optional<AbelianSignature> abelian_signature(const GroupSpec& spec);

/// alpha = P - phi(P), P = product over all primes of p^{smallest exponent}.
/// Throws NotApplicableError for cyclic groups.
std::uint64_t alpha_bound(const AbelianSignature& sig);

/// beta = (product of cyclic Sylow orders) * (Q - phi(Q)), Q = product over the
/// non-cyclic Sylows of p^{smallest exponent}. Throws NotApplicableError for
/// cyclic groups.
std::uint64_t beta_bound(const AbelianSignature& sig);

struct DomPrediction {
  std::uint64_t size = 0;
  int case_tag = 0;
};

enum class BoundKind { Exactly, AtMost, Unknown };

struct DiameterPrediction {
  BoundKind kind = BoundKind::Unknown;
  std::size_t value = 0;
};

struct KappaPrediction {
  BoundKind kind = BoundKind::Unknown;  // AtMost reads as "upper bound"
  std::uint64_t value = 0;
};

// Each predictor returns nullopt / Unknown outside the hypotheses it covers.

std::optional<DomPrediction> predict_dom_set(const NilpotentProfile& profile);

/// Membership in the predicted dominating set depends only on the element order:
/// coprime to |G1|, and 2-part at most 2 when a quaternion Sylow is present.
bool predicted_dominating(const NilpotentProfile& profile, std::uint64_t element_order);

std::optional<bool> predict_proper_connectivity(const NilpotentProfile& profile);
std::optional<std::uint64_t> predict_component_count(const NilpotentProfile& profile);
std::optional<std::uint64_t> predict_domination_number(const NilpotentProfile& profile);
DiameterPrediction predict_diameter(const NilpotentProfile& profile);
KappaPrediction predict_kappa(const NilpotentProfile& profile, std::optional<std::uint64_t> beta = std::nullopt);
std::optional<std::uint64_t> predict_eta_lambda1(const NilpotentProfile& profile);

struct Prediction {
  std::optional<DomPrediction> dom;
  std::optional<bool> proper_connected;
  std::optional<std::uint64_t> component_count;
  std::optional<std::uint64_t> domination_number;
  DiameterPrediction diameter;
  KappaPrediction kappa;
  std::optional<std::uint64_t> alpha;
  std::optional<std::uint64_t> beta;
  std::optional<std::uint64_t> eta_lambda1;
};

Prediction predict(const NilpotentProfile& profile, const std::optional<AbelianSignature>& sig = std::nullopt);

enum class RowStatus { Match, Mismatch, Skipped, Flagged, Unpredicted };

const char* to_string(RowStatus s);

struct ReportRow {
  std::string quantity;
  nlohmann::json predicted;  // null when there is no prediction
  nlohmann::json computed;   // null when skipped
  RowStatus status = RowStatus::Skipped;
  std::string theorem;
  std::string note;
};

struct VerificationReport {
  std::string group_name;
  std::size_t order = 0;
  NilpotentProfile profile;
  std::optional<std::uint64_t> alpha;
  std::optional<std::uint64_t> beta;
  std::vector<ReportRow> rows;
  bool all_match = true;

  const ReportRow* row(const std::string& quantity) const;
  std::size_t count(RowStatus s) const;
};

struct VerifyOptions {
  std::size_t max_gamma_n = 400;  // proper-graph vertices for exact domination
  std::uint64_t gamma_node_budget = 50'000'000;
  std::size_t max_flow_n = 300;  // enhanced-graph vertices for vertex connectivity
  std::size_t eigen_n = 400;     // enhanced-graph vertices for the exact spectral rank
};

/// Builds every graph, runs the brute-force metrics, and pairs them with the
/// closed-form predictions. Skipped rows never count as mismatches.
VerificationReport verify(const Group& g, const VerifyOptions& options = {});

nlohmann::json to_json(const NilpotentProfile& p);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace epg
