#include "epg/nilpotent.hpp"

#include "epg/number_theory.hpp"

namespace epg {

std::vector<std::uint64_t> NilpotentProfile::noncyclic_primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& [p, info] : sylows)
    if (info.kind == SylowKind::Other) out.push_back(p);
  return out;
}

const char* to_string(SylowKind k) {
  switch (k) {
    case SylowKind::Cyclic: return "cyclic";
    case SylowKind::GeneralizedQuaternion: return "generalized_quaternion";
    case SylowKind::Other: return "other";
  }
  return "?";
}

int case_number(NilpotentCase c) { return static_cast<int>(c); }

namespace {
bool is_power_of(std::uint64_t x, std::uint64_t p) {
  while (x % p == 0) x /= p;
  return x == 1;
}
}  // namespace

std::vector<Element> p_elements(const Group& g, std::uint64_t p) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (is_power_of(g.order_of(x), p)) out.push_back(x);
  return out;
}

bool is_nilpotent(const Group& g) {
  for (auto p : prime_divisors(g.order()))
    if (p_elements(g, p).size() != p_part(g.order(), p)) return false;
  return true;
}

std::map<std::uint64_t, std::vector<Element>> sylow_decomposition(const Group& g) {
  if (!is_nilpotent(g)) throw NotNilpotentError(g.name() + " is not nilpotent");
  std::map<std::uint64_t, std::vector<Element>> out;
  for (auto p : prime_divisors(g.order())) out.emplace(p, p_elements(g, p));
  return out;
}

SylowKind classify_sylow(std::span<const Element> subgroup, const Group& g) {
  const std::uint64_t size = subgroup.size();
  std::size_t involutions = 0;
  for (Element x : subgroup) {
    if (g.order_of(x) == size) return SylowKind::Cyclic;
    if (g.order_of(x) == 2) ++involutions;
  }
  const bool two_power = size >= 8 && (size & (size - 1)) == 0;
  if (two_power && involutions == 1) return SylowKind::GeneralizedQuaternion;
  return SylowKind::Other;
}

std::uint64_t count_prime_order_subgroups(const Group& g, std::uint64_t p) {
  std::uint64_t count = 0;
  for (auto o : g.element_orders())
    if (o == p) ++count;
  if (count % (p - 1) != 0)
    throw Error("elements of order " + std::to_string(p) + " in " + g.name() +
                " do not split into subgroups of order p");
  return count / (p - 1);
}

NilpotentProfile nilpotent_profile(const Group& g) {
  NilpotentProfile prof;
  prof.is_nilpotent = is_nilpotent(g);
  for (auto p : prime_divisors(g.order())) {
    SylowInfo info;
    const auto elems = p_elements(g, p);
    info.order = p_part(g.order(), p);
    info.s_p = count_prime_order_subgroups(g, p);
    for (Element x : elems) info.max_element_order = std::max<std::uint64_t>(info.max_element_order, g.order_of(x));
    info.kind = prof.is_nilpotent ? classify_sylow(elems, g) : SylowKind::Other;
    prof.sylows.emplace(p, info);
  }
  if (!prof.is_nilpotent) {
    prof.case_id = NilpotentCase::NotNilpotent;
    return prof;
  }
  for (const auto& [p, info] : prof.sylows) {
    switch (info.kind) {
      case SylowKind::Cyclic: prof.cyclic_part_order *= info.order; break;
      case SylowKind::GeneralizedQuaternion: prof.quaternion_order = info.order; break;
      case SylowKind::Other: prof.odd_noncyclic_part_order *= info.order; break;
    }
  }
  const bool has_cyclic = prof.cyclic_part_order > 1;
  const bool has_quaternion = prof.quaternion_order.has_value();
  if (!has_cyclic && !has_quaternion) prof.case_id = NilpotentCase::One;
  else if (has_cyclic && !has_quaternion) prof.case_id = NilpotentCase::Two;
  else if (!has_cyclic) prof.case_id = NilpotentCase::Three;
  else prof.case_id = NilpotentCase::Four;
  return prof;
}

}  // namespace epg
