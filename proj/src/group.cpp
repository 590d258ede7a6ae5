#include "epg/group.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "epg/number_theory.hpp"

namespace epg {

// ---------------------------------------------------------------------------
// Specs
// ---------------------------------------------------------------------------

std::uint64_t atom_order(const Atom& a) {
  return std::visit([](const auto& x) -> std::uint64_t {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Cyclic>)
      return x.n;
    else
      return x.order;
  }, a);
}

std::string to_string(const Atom& a) {
  if (auto c = std::get_if<Cyclic>(&a)) return "Z" + std::to_string(c->n);
  if (auto q = std::get_if<Quaternion>(&a)) return "Q" + std::to_string(q->order);
  return "D" + std::to_string(std::get<Dihedral>(a).order);
}

std::uint64_t GroupSpec::order() const {
  std::uint64_t n = 1;
  for (const auto& f : factors) n *= atom_order(f);
  return n;
}

std::string to_string(const GroupSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i) out += 'x';
    out += to_string(spec.factors[i]);
  }
  return out;
}

GroupSpec operator*(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  std::size_t pos = 0;
  if (text.empty()) throw SpecSyntaxError("empty group spec", 0);
  while (true) {
    if (pos >= text.size()) throw SpecSyntaxError("expected atom", pos);
    const char kind = text[pos];
    if (kind != 'Z' && kind != 'Q' && kind != 'D')
      throw SpecSyntaxError(std::string("expected 'Z', 'Q' or 'D', found '") + kind + "'", pos);
    const std::size_t num_pos = ++pos;
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '9')
      throw SpecSyntaxError("expected positive integer without leading zero", pos);
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + num_pos, text.data() + pos, value);
    if (ec != std::errc{} || value > (1ull << 32))
      throw SpecSyntaxError("integer out of range", num_pos);

    switch (kind) {
      case 'Z':
        spec.factors.emplace_back(Cyclic{value});
        break;
      case 'Q':
        if (value < 8 || (value & (value - 1)) != 0)
          throw SpecSyntaxError("quaternion order must be a power of two >= 8, got " +
                                    std::to_string(value), num_pos);
        spec.factors.emplace_back(Quaternion{value});
        break;
      default:
        if (value < 6 || value % 2 != 0)
          throw SpecSyntaxError("dihedral order must be even and >= 6, got " + std::to_string(value),
                                num_pos);
        spec.factors.emplace_back(Dihedral{value});
        break;
    }
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw SpecSyntaxError(std::string("expected 'x', found '") + text[pos] + "'", pos);
    ++pos;
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Components
// ---------------------------------------------------------------------------

std::uint32_t Component::multiply(std::uint32_t x, std::uint32_t y) const {
  switch (kind) {
    case Kind::Cyclic: {
      const std::uint32_t s = x + y;
      return s >= order ? s - order : s;
    }
    case Kind::Dihedral:
    case Kind::Quaternion: {
      const std::uint32_t m = half;
      const std::uint32_t i = x % m, j = x / m, l = y % m, k = y / m;
      if (j == 0) return k * m + (i + l) % m;
      // r^i s r^l = r^{i-l} s ; a^i b a^l = a^{i-l} b
      const std::uint32_t rot = (i + m - l) % m;
      if (k == 0) return m + rot;
      if (kind == Kind::Dihedral) return rot;  // s^2 = e
      return (rot + m / 2) % m;                // b^2 = a^{M/2}
    }
    case Kind::Table:
      return (*table)[static_cast<std::size_t>(x) * order + y];
  }
  return 0;
}

std::string Component::element_name(std::uint32_t x) const {
  switch (kind) {
    case Kind::Cyclic:
      return std::to_string(x);
    case Kind::Dihedral:
    case Kind::Quaternion: {
      const char r = kind == Kind::Dihedral ? 'r' : 'a';
      const char s = kind == Kind::Dihedral ? 's' : 'b';
      const std::uint32_t i = x % half, j = x / half;
      std::string out;
      if (i == 1) out += r;
      if (i > 1) out += std::string(1, r) + "^" + std::to_string(i);
      if (j) out += s;
      return out.empty() ? "e" : out;
    }
    case Kind::Table:
      if (names && x < names->size()) return (*names)[x];
      return std::to_string(x);
  }
  return {};
}

namespace {

Component make_component(const Atom& atom) {
  Component c;
  if (auto z = std::get_if<Cyclic>(&atom)) {
    c.kind = Component::Kind::Cyclic;
    c.order = static_cast<std::uint32_t>(z->n);
  } else if (auto q = std::get_if<Quaternion>(&atom)) {
    c.kind = Component::Kind::Quaternion;
    c.order = static_cast<std::uint32_t>(q->order);
    c.half = c.order / 2;
  } else {
    c.kind = Component::Kind::Dihedral;
    c.order = static_cast<std::uint32_t>(std::get<Dihedral>(atom).order);
    c.half = c.order / 2;
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Group
// ---------------------------------------------------------------------------

Group::Group(std::vector<Component> components, std::string display_name,
             std::optional<GroupSpec> spec)
    : components_(std::move(components)), name_(std::move(display_name)), spec_(std::move(spec)) {
  strides_.assign(components_.size(), 1);
  std::uint64_t n = 1;
  for (std::size_t i = components_.size(); i-- > 0;) {
    strides_[i] = n;
    n *= components_[i].order;
    if (n > 0xFFFFFFFFull) throw OrderLimitError("group order exceeds 32-bit element indices");
  }
  order_ = static_cast<std::size_t>(n);

  const auto primes = prime_divisors(order_);
  orders_.resize(order_);
  inverse_.resize(order_);
  for (Element g = 0; g < order_; ++g) {
    std::uint64_t t = order_;
    for (auto p : primes)
      while (t % p == 0 && power(g, t / p) == 0) t /= p;
    if (power(g, t) != 0)
      throw GroupAxiomError("order", {g}, "element " + std::to_string(g) + " has no finite order dividing |G|");
    orders_[g] = static_cast<std::uint32_t>(t);
    inverse_[g] = power(g, t - 1);
  }
  for (Element g = 0; g < order_; ++g) {
    if (multiply(0, g) != g || multiply(g, 0) != g)
      throw GroupAxiomError("identity", {0, g}, "index 0 is not a two-sided identity");
    if (multiply(g, inverse_[g]) != 0 || multiply(inverse_[g], g) != 0)
      throw GroupAxiomError("inverse", {g}, "element " + std::to_string(g) + " has no two-sided inverse");
  }
}

Element Group::multiply(Element x, Element y) const {
  if (components_.size() == 1) return components_[0].multiply(x, y);
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    const auto dx = static_cast<std::uint32_t>((x / strides_[i]) % c.order);
    const auto dy = static_cast<std::uint32_t>((y / strides_[i]) % c.order);
    out += c.multiply(dx, dy) * strides_[i];
  }
  return static_cast<Element>(out);
}

Element Group::power(Element g, std::uint64_t t) const {
  Element result = 0, base = g;
  while (t) {
    if (t & 1) result = multiply(result, base);
    t >>= 1;
    if (t) base = multiply(base, base);
  }
  return result;
}

std::vector<std::uint32_t> Group::digits(Element g) const {
  std::vector<std::uint32_t> d(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    d[i] = static_cast<std::uint32_t>((g / strides_[i]) % components_[i].order);
  return d;
}

Element Group::compose(std::span<const std::uint32_t> d) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) out += d[i] * strides_[i];
  return static_cast<Element>(out);
}

std::string Group::element_name(Element g) const {
  if (components_.size() == 1) return components_[0].element_name(g);
  std::string out = "(";
  auto d = digits(g);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += components_[i].element_name(d[i]);
  }
  return out + ")";
}

bool Group::is_abelian() const {
  for (Element x = 0; x < order_; ++x)
    for (Element y = x + 1; y < order_; ++y)
      if (multiply(x, y) != multiply(y, x)) return false;
  return true;
}

Group build_group(const GroupSpec& spec, const BuildOptions& options) {
  if (spec.factors.empty()) throw SpecSyntaxError("group spec has no factors", 0);
  std::uint64_t n = 1;
  for (const auto& f : spec.factors) {
    n *= atom_order(f);
    if (n > options.max_order)
      throw OrderLimitError("group order of " + to_string(spec) + " exceeds limit " +
                            std::to_string(options.max_order));
  }
  std::vector<Component> comps;
  for (const auto& f : spec.factors) comps.push_back(make_component(f));
  return Group(std::move(comps), to_string(spec), spec);
}

Group build_group(std::string_view spec_text, const BuildOptions& options) {
  return build_group(parse_group_spec(spec_text), options);
}

Group factor_group(const Group& g, std::size_t i) {
  std::optional<GroupSpec> spec;
  std::string name = "factor" + std::to_string(i);
  if (g.spec()) {
    spec = GroupSpec{{g.spec()->factors.at(i)}};
    name = to_string(*spec);
  }
  return Group({g.components()[i]}, name, spec);
}

// ---------------------------------------------------------------------------
// Cayley tables
// ---------------------------------------------------------------------------

Group cayley_group(const std::vector<std::vector<std::uint32_t>>& table, std::vector<std::string> names,
                   std::string display_name, const CayleyOptions& options) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupAxiomError("shape", {}, "empty Cayley table");
  auto flat = std::make_shared<std::vector<std::uint32_t>>(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw GroupAxiomError("shape", {i}, "row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n)
        throw GroupAxiomError("closure", {i, j}, "entry out of range at (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ")");
      (*flat)[i * n + j] = table[i][j];
    }
  }
  auto at = [&](std::size_t i, std::size_t j) { return (*flat)[i * n + j]; };

  for (std::size_t j = 0; j < n; ++j)
    if (at(0, j) != j || at(j, 0) != j)
      throw GroupAxiomError("identity", {0, j}, "index 0 is not a two-sided identity (column/row " +
                                                    std::to_string(j) + ")");

  // Latin square: each row and column a permutation.
  std::vector<std::uint8_t> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(i, j)]++)
        throw GroupAxiomError("latin", {i, j}, "row " + std::to_string(i) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(j, i)]++)
        throw GroupAxiomError("latin", {j, i}, "column " + std::to_string(i) + " is not a permutation");
    }
  }

  if (options.check_associativity) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw GroupAxiomError("associativity", {a, b, c},
                                  "associativity fails for (" + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(c) + ")");
  }

  if (!names.empty() && names.size() != n)
    throw GroupAxiomError("shape", {names.size()}, "names array length does not match order");

  Component c;
  c.kind = Component::Kind::Table;
  c.order = static_cast<std::uint32_t>(n);
  c.table = std::move(flat);
  if (!names.empty()) c.names = std::make_shared<const std::vector<std::string>>(std::move(names));
  return Group({std::move(c)}, std::move(display_name));
}

Group cayley_group_from_json(std::string_view json_text, std::string display_name,
                             const CayleyOptions& options) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GroupAxiomError("format", {}, std::string("malformed Cayley table JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
    throw GroupAxiomError("format", {}, "Cayley table JSON needs \"order\" and \"table\"");
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<std::string> names;
  std::size_t order = 0;
  try {
    order = doc.at("order").get<std::size_t>();
    table = doc.at("table").get<std::vector<std::vector<std::uint32_t>>>();
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw GroupAxiomError("format", {}, std::string("malformed Cayley table JSON: ") + e.what());
  }
  if (table.size() != order)
    throw GroupAxiomError("shape", {order, table.size()}, "\"order\" does not match the table size");
  return cayley_group(table, std::move(names), std::move(display_name), options);
}

Group load_cayley_table(const std::string& path, const CayleyOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open Cayley table file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return cayley_group_from_json(ss.str(), path, options);
}

std::uint32_t element_order(Element g, const Group& group) { return group.order_of(g); }

std::vector<Element> cyclic_subgroup(Element g, const Group& group) {
  std::vector<Element> out;
  out.reserve(group.order_of(g));
  Element x = 0;
  do {
    out.push_back(x);
    x = group.multiply(x, g);
  } while (x != 0);
  return out;
}

}  // namespace epg
