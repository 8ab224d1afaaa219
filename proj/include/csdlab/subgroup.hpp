#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "csdlab/element_set.hpp"
#include "csdlab/finite_group.hpp"

namespace csdlab {

// A subgroup of a particular FiniteGroup, held as a member bitset.
class Subgroup {
 public:
  Subgroup() = default;

  // Checks closure under the table product and membership of the identity.
  Subgroup(const FiniteGroup& g, ElementSet members);

  // Skips the closure check; callers guarantee it.
  static Subgroup trusted(const FiniteGroup& g, ElementSet members);

  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return size_; }
  std::uint64_t group_id() const noexcept { return group_id_; }
  bool contains(Elem e) const noexcept { return members_.contains(e); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.group_id_ == b.group_id_ && a.members_ == b.members_;
  }

 private:
  ElementSet members_;
  std::size_t size_ = 0;
  std::uint64_t group_id_ = 0;
};

// Ordering used by every enumeration: ascending size, then lex_less.
bool canonical_less(const Subgroup& a, const Subgroup& b) noexcept;

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

// <g>
Subgroup cyclic_subgroup(const FiniteGroup& g, Elem generator);

// Subgroup generated by the given elements.
Subgroup generate(const FiniteGroup& g, std::span<const Elem> generators);

// <A ∪ B>
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

// Identity-containing and product-closed.
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

// Throws InvalidArgument if h does not belong to g.
void require_same_group(const FiniteGroup& g, const Subgroup& h);

// The subgroup as a group in its own right. Elements are renumbered in
// ascending order of their index in g.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

}  // namespace csdlab
