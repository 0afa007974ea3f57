#ifndef MAPCENSUS_GROUP_HPP
#define MAPCENSUS_GROUP_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mapcensus/permutation.hpp"

namespace mapcensus {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultGroupOrderCap = 5040;

/// A finite group stored as a dense multiplication table. Element 0 is
/// always the identity. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates the table (Latin square, identity at 0, associativity,
  /// inverses); throws Error(NotAGroup) naming the offending entries.
  explicit FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> names = {},
                       std::size_t order_cap = kDefaultGroupOrderCap);

  std::size_t order() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inverse(Element g) const noexcept { return inverses_[g]; }
  std::uint32_t element_order(Element g) const noexcept { return orders_[g]; }

  /// g^e for e >= 0.
  Element power(Element g, std::uint64_t e) const noexcept;

  std::span<const Element> inverses() const noexcept { return inverses_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name(Element g) const;

  /// Row-major copy of the table.
  std::vector<std::vector<Element>> table() const;

 private:
  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::string> names_;
};

struct ConjugacyClass {
  Element representative = 0;
  std::vector<Element> members;  // sorted
  std::uint32_t element_order = 1;
};

/// A group given by permutations together with its table form; element i
/// of `group` is `elements[i]`.
struct PermutationGroup {
  FiniteGroup group;
  std::vector<Perm> elements;
};

FiniteGroup build_group_from_table(std::vector<std::vector<Element>> table, std::vector<std::string> names = {},
                                   std::size_t order_cap = kDefaultGroupOrderCap);

/// Closure of the generators under composition, with (a∘b)(x) = a(b(x)) as
/// the group product. Throws CapExceeded past `cap` elements.
PermutationGroup permutation_group_closure(std::span<const Perm> generators, std::size_t cap = kDefaultGroupOrderCap);

FiniteGroup build_group_from_permutation_generators(std::span<const Perm> generators,
                                                    std::size_t cap = kDefaultGroupOrderCap);

enum class GroupFamily { cyclic, dihedral, symmetric, elementary_abelian_2, direct_product };

/// cyclic(n): Z_n.  dihedral(n): symmetries of an n-gon, order 2n, element
/// r^i s^j stored at i + n*j.  symmetric(n): S_n.  elementary_abelian_2(n):
/// (Z_2)^n with XOR product.  For direct products use direct_product().
FiniteGroup named_group(GroupFamily family, std::uint32_t param, std::size_t order_cap = kDefaultGroupOrderCap);

/// A × B with (a, b) stored at a*|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t order_cap = kDefaultGroupOrderCap);

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

std::uint32_t element_order(const FiniteGroup& g, Element x);

std::vector<Element> centralizer(const FiniteGroup& g, std::span<const Element> subset);

/// Smallest subgroup containing `gens`, sorted.
std::vector<Element> generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);

// Group text format: "group <order>", then <order> rows of the table,
// then an optional "names ..." line.
FiniteGroup read_group(std::istream& in, std::size_t order_cap = kDefaultGroupOrderCap);
FiniteGroup load_group(const std::string& path, std::size_t order_cap = kDefaultGroupOrderCap);
void write_group(std::ostream& out, const FiniteGroup& g);

}  // namespace mapcensus

#endif  // MAPCENSUS_GROUP_HPP
