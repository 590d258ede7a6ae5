#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "epg/group.hpp"

namespace epg {

enum class SylowKind { Cyclic, GeneralizedQuaternion, Other };

/// The four structural cases of a finite nilpotent group
///   1: G = G1                  (no cyclic or generalized-quaternion Sylow)
///   2: G = G1 x Z_n
///   3: G = G1 x Q_{2^k}
///   4: G = G1 x Z_n x Q_{2^k}
/// where G1 is the product of the remaining ("Other") Sylow subgroups.
enum class NilpotentCase { One = 1, Two = 2, Three = 3, Four = 4, NotNilpotent = 0 };

struct SylowInfo {
  std::uint64_t order = 1;  // p^t
  SylowKind kind = SylowKind::Other;
  std::uint64_t s_p = 0;  // number of subgroups of order p
  std::uint64_t max_element_order = 1;
};

struct NilpotentProfile {
  bool is_nilpotent = false;
  std::map<std::uint64_t, SylowInfo> sylows;
  NilpotentCase case_id = NilpotentCase::NotNilpotent;
  std::uint64_t odd_noncyclic_part_order = 1;  // |G1|
  std::uint64_t cyclic_part_order = 1;         // n
  std::optional<std::uint64_t> quaternion_order;

  /// Primes whose Sylow is neither cyclic nor generalized quaternion.
  std::vector<std::uint64_t> noncyclic_primes() const;
  bool g1_trivial() const { return odd_noncyclic_part_order == 1; }
  bool g1_is_p_group() const { return noncyclic_primes().size() == 1; }
};

const char* to_string(SylowKind k);
int case_number(NilpotentCase c);

/// Elements whose order is a power of p (including the identity).
std::vector<Element> p_elements(const Group& g, std::uint64_t p);

/// True iff every Sylow subgroup is normal, tested as |{p-elements}| = p-part of |G|.
bool is_nilpotent(const Group& g);

/// prime -> Sylow subgroup (sorted element indices). Throws NotNilpotentError.
std::map<std::uint64_t, std::vector<Element>> sylow_decomposition(const Group& g);

/// Cyclic iff some element has order |H|; generalized quaternion iff |H| = 2^k >= 8,
/// non-cyclic, with exactly one involution; otherwise Other.
SylowKind classify_sylow(std::span<const Element> subgroup, const Group& g);

/// (#elements of order p) / (p - 1).
std::uint64_t count_prime_order_subgroups(const Group& g, std::uint64_t p);

NilpotentProfile nilpotent_profile(const Group& g);

}  // namespace epg
