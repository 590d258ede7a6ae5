#include "epg/families.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <thread>

#include "epg/errors.hpp"
#include "epg/number_theory.hpp"

namespace epg {

std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

GroupSpec p_group_spec(std::uint64_t p, const std::vector<unsigned>& parts) {
  GroupSpec spec;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) spec.factors.push_back(Cyclic{ipow(p, *it)});
  return spec;
}

}  // namespace

std::vector<GroupSpec> abelian_p_groups(std::uint64_t p, std::uint64_t max_order) {
  if (!is_prime(p)) throw SpecSyntaxError("abelian p-group family needs a prime, got " + std::to_string(p), 0);
  std::vector<GroupSpec> out;
  std::uint64_t order = p;
  for (unsigned k = 1; order <= max_order; ++k, order *= p) {
    auto parts = partitions(k);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) out.push_back(p_group_spec(p, *it));
  }
  return out;
}

std::vector<GroupSpec> abelian_groups(std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = 2; n <= max_order; ++n) {
    std::vector<GroupSpec> acc{GroupSpec{}};
    for (auto [p, e] : factorize(n)) {
      std::vector<GroupSpec> next;
      for (const auto& base : acc) {
        for (const auto& parts : partitions(e)) next.push_back(base * p_group_spec(p, parts));
      }
      acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end(),
              [](const GroupSpec& a, const GroupSpec& b) { return to_string(a) < to_string(b); });
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

std::vector<GroupSpec> pool_products(const std::vector<Atom>& pool, std::uint64_t max_order) {
  std::vector<GroupSpec> out;
  GroupSpec current;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t order) {
    if (!current.factors.empty()) out.push_back(current);
    for (std::size_t i = start; i < pool.size(); ++i) {
      const std::uint64_t o = atom_order(pool[i]);
      if (o > max_order / order) continue;
      current.factors.push_back(pool[i]);
      rec(i, order * o);
      current.factors.pop_back();
    }
  };
  rec(0, 1);
  return out;
}

namespace {

std::uint64_t parse_number(std::string_view text, std::size_t position) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw SpecSyntaxError("expected a number, got '" + std::string(text) + "'", position);
  }
  return value;
}

}  // namespace

std::vector<GroupSpec> parse_family(std::string_view descriptor) {
  const auto first = descriptor.find(':');
  const auto last = descriptor.rfind(':');
  if (first == std::string_view::npos || first == last) {
    throw SpecSyntaxError("family must look like abelian-p:<p>:<maxorder> or pool:<atom,...>:<maxorder>", 0);
  }
  const auto kind = descriptor.substr(0, first);
  const auto middle = descriptor.substr(first + 1, last - first - 1);
  const std::uint64_t max_order = parse_number(descriptor.substr(last + 1), last + 1);

  if (kind == "abelian-p") return abelian_p_groups(parse_number(middle, first + 1), max_order);
  if (kind == "pool") {
    std::vector<Atom> pool;
    std::size_t start = 0;
    while (start <= middle.size()) {
      auto end = middle.find(',', start);
      if (end == std::string_view::npos) end = middle.size();
      const auto item = middle.substr(start, end - start);
      try {
        GroupSpec spec = parse_group_spec(item);
        pool.insert(pool.end(), spec.factors.begin(), spec.factors.end());
      } catch (const SpecSyntaxError& e) {
        throw SpecSyntaxError("bad pool atom '" + std::string(item) + "'", first + 1 + start + e.position());
      }
      start = end + 1;
    }
    return pool_products(pool, max_order);
  }
  throw SpecSyntaxError("unknown family kind '" + std::string(kind) + "'", 0);
}

std::size_t SweepResult::mismatches() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const SweepEntry& e) {
    return e.report && !e.report->all_match;
  }));
}

std::size_t SweepResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const SweepEntry& e) { return !e.report; }));
}

SweepResult sweep(const std::vector<GroupSpec>& groups, const SweepOptions& options) {
  SweepResult result;
  result.entries.resize(groups.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      SweepEntry& entry = result.entries[i];
      entry.group = to_string(groups[i]);
      try {
        entry.report = verify(build_group(groups[i], options.build), options.verify);
      } catch (const std::exception& e) {
        entry.error = e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::stable_sort(result.entries.begin(), result.entries.end(),
                   [](const SweepEntry& a, const SweepEntry& b) { return a.group < b.group; });
  return result;
}

nlohmann::json to_json(const SweepResult& r) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& e : r.entries) {
    if (e.report) {
      reports.push_back(to_json(*e.report));
    } else {
      reports.push_back({{"group", e.group}, {"error", e.error}});
    }
  }
  return {{"reports", reports},
          {"groups", r.entries.size()},
          {"mismatches", r.mismatches()},
          {"failures", r.failures()}};
}

}  // namespace epg
