#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epg/group.hpp"
#include "epg/oracle.hpp"

namespace epg {

/// Partitions of n into non-increasing positive parts, lexicographically descending.
std::vector<std::vector<unsigned>> partitions(unsigned n);

/// Every non-trivial abelian p-group of order <= max_order, one spec per
/// exponent partition (factors ascending, e.g. Z2xZ4).
std::vector<GroupSpec> abelian_p_groups(std::uint64_t p, std::uint64_t max_order);

/// Every abelian group of order 2..max_order in primary-factor form, sorted by
/// order and then by name.
std::vector<GroupSpec> abelian_groups(std::uint64_t max_order);

/// Every non-empty multiset of pool atoms whose product order is <= max_order.
/// Factors keep the pool order.
std::vector<GroupSpec> pool_products(const std::vector<Atom>& pool, std::uint64_t max_order);

/// "abelian-p:<p>:<maxorder>" or "pool:<atom,atom,...>:<maxorder>".
std::vector<GroupSpec> parse_family(std::string_view descriptor);

struct SweepEntry {
  std::string group;
  std::optional<VerificationReport> report;
  std::string error;  // set when building or verifying failed
};

struct SweepResult {
  std::vector<SweepEntry> entries;  // sorted by group name

  std::size_t mismatches() const;
  std::size_t failures() const;
};

struct SweepOptions {
  VerifyOptions verify;
  BuildOptions build;
  unsigned workers = 1;
};

SweepResult sweep(const std::vector<GroupSpec>& groups, const SweepOptions& options = {});

nlohmann::json to_json(const SweepResult& r);

}  // namespace epg
