#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "epg/errors.hpp"

namespace epg {

using Element = std::uint32_t;

// ---------------------------------------------------------------------------
// Group specifications
// ---------------------------------------------------------------------------

struct Cyclic {
  std::uint64_t n;
  bool operator==(const Cyclic&) const = default;
};

/// Q_{2^k}, k >= 3. `order` is 2^k.
struct Quaternion {
  std::uint64_t order;
  bool operator==(const Quaternion&) const = default;
};

/// D_{2m}, m >= 3. `order` is 2m.
struct Dihedral {
  std::uint64_t order;
  bool operator==(const Dihedral&) const = default;
};

using Atom = std::variant<Cyclic, Quaternion, Dihedral>;

std::uint64_t atom_order(const Atom& a);
std::string to_string(const Atom& a);

/// A direct product of atoms, in the order written.
struct GroupSpec {
  std::vector<Atom> factors;

  std::uint64_t order() const;
  bool operator==(const GroupSpec&) const = default;
};

std::string to_string(const GroupSpec& spec);

/// Parses `atom ("x" atom)*` with atom := "Z" int | "Q" int | "D" int.
GroupSpec parse_group_spec(std::string_view text);

/// Concatenation of factor lists (direct product).
GroupSpec operator*(const GroupSpec& a, const GroupSpec& b);

// ---------------------------------------------------------------------------
// Concrete groups
// ---------------------------------------------------------------------------

/// One direct factor of a Group. Elements of a factor are 0..order-1 with 0 the
/// identity.
///
/// Dihedral D_{2m}: index j*m + i is r^i s^j.  Quaternion Q_{2^k} with
/// M = 2^{k-1}: index j*M + i is a^i b^j.  Table factors use the table.
struct Component {
  enum class Kind { Cyclic, Dihedral, Quaternion, Table };

  Kind kind = Kind::Cyclic;
  std::uint32_t order = 1;
  std::uint32_t half = 1;  // m for dihedral, 2^{k-1} for quaternion
  std::shared_ptr<const std::vector<std::uint32_t>> table;
  std::shared_ptr<const std::vector<std::string>> names;

  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const;
  std::string element_name(std::uint32_t x) const;
};

struct BuildOptions {
  std::uint64_t max_order = 20000;
};

/// A finite group as a direct product of components, elements flattened in
/// mixed radix (first factor most significant). Index 0 is the identity.
/// Immutable after construction.
class Group {
 public:
  Group(std::vector<Component> components, std::string display_name,
        std::optional<GroupSpec> spec = std::nullopt);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element multiply(Element x, Element y) const;
  Element inverse(Element g) const { return inverse_[g]; }
  Element power(Element g, std::uint64_t t) const;
  std::uint32_t order_of(Element g) const { return orders_[g]; }
  const std::vector<std::uint32_t>& element_orders() const { return orders_; }

  std::string element_name(Element g) const;
  const std::string& name() const { return name_; }

  std::span<const Component> components() const { return components_; }
  std::vector<std::uint32_t> digits(Element g) const;
  Element compose(std::span<const std::uint32_t> digits) const;

  /// The spec this group was built from; empty for Cayley-table groups.
  const std::optional<GroupSpec>& spec() const { return spec_; }

  bool is_abelian() const;

 private:
  std::vector<Component> components_;
  std::vector<std::uint64_t> strides_;
  std::size_t order_ = 1;
  std::string name_;
  std::optional<GroupSpec> spec_;
  std::vector<std::uint32_t> orders_;
  std::vector<Element> inverse_;
};

Group build_group(const GroupSpec& spec, const BuildOptions& options = {});
Group build_group(std::string_view spec_text, const BuildOptions& options = {});

/// The i-th direct factor of a product group as a standalone group.
Group factor_group(const Group& g, std::size_t i);

struct CayleyOptions {
  bool check_associativity = false;
};

/// Validates and wraps an explicit multiplication table (0-based, row 0 and
/// column 0 the identity).
Group cayley_group(const std::vector<std::vector<std::uint32_t>>& table,
                   std::vector<std::string> names = {}, std::string display_name = "cayley",
                   const CayleyOptions& options = {});

/// Parses the JSON schema {"order": n, "table": [[...]], "names": [...]}.
Group cayley_group_from_json(std::string_view json_text, std::string display_name = "cayley",
                             const CayleyOptions& options = {});

Group load_cayley_table(const std::string& path, const CayleyOptions& options = {});

std::uint32_t element_order(Element g, const Group& group);

/// <g> in generation order g^0 = e, g^1, ...; size o(g).
std::vector<Element> cyclic_subgroup(Element g, const Group& group);

}  // namespace epg
