#include "csdlab/subgroup.hpp"

#include <string>

#include "csdlab/errors.hpp"

namespace csdlab {

Subgroup::Subgroup(const FiniteGroup& g, ElementSet members) {
  if (members.universe() != g.order()) throw InvalidArgument("subgroup bitset width differs from group order");
  if (!is_subgroup(g, members)) throw InvalidArgument("element set is not a subgroup");
  *this = trusted(g, std::move(members));
}

Subgroup Subgroup::trusted(const FiniteGroup& g, ElementSet members) {
  Subgroup s;
  s.size_ = members.count();
  s.members_ = std::move(members);
  s.group_id_ = g.id();
  return s;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a.members(), b.members());
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(kIdentity);
  return Subgroup::trusted(g, std::move(s));
}

Subgroup whole_group(const FiniteGroup& g) { return Subgroup::trusted(g, g.all_elements()); }

Subgroup cyclic_subgroup(const FiniteGroup& g, Elem generator) {
  if (generator >= g.order()) throw InvalidArgument("element index out of range");
  ElementSet s(g.order());
  Elem cur = kIdentity;
  do {
    s.insert(cur);
    cur = g.product(cur, generator);
  } while (cur != kIdentity);
  return Subgroup::trusted(g, std::move(s));
}

namespace {

// Closes `members` (already a subgroup or {1}) under right multiplication by gens.
Subgroup close_under(const FiniteGroup& g, ElementSet members, std::span<const Elem> gens) {
  std::vector<Elem> frontier = members.members();
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Elem x = frontier[i];
    for (Elem s : gens) {
      const Elem y = g.product(x, s);
      if (!members.contains(y)) {
        members.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return Subgroup::trusted(g, std::move(members));
}

}  // namespace

Subgroup generate(const FiniteGroup& g, std::span<const Elem> generators) {
  for (Elem e : generators) {
    if (e >= g.order()) throw InvalidArgument("element index out of range");
  }
  ElementSet start(g.order());
  start.insert(kIdentity);
  return close_under(g, std::move(start), generators);
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  require_same_group(g, a);
  require_same_group(g, b);
  if (b.members().is_subset_of(a.members())) return a;
  if (a.members().is_subset_of(b.members())) return b;
  // Every element of the join is a word in A ∪ B, so A ∪ B is a generating set
  // and right multiplication by it from the members of A reaches everything.
  std::vector<Elem> gens = a.members().members();
  b.members().for_each([&](Elem e) {
    if (!a.contains(e)) gens.push_back(e);
  });
  return close_under(g, a.members(), gens);
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(kIdentity)) return false;
  const auto members = s.members();
  for (Elem a : members) {
    for (Elem b : members) {
      if (!s.contains(g.product(a, b))) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  require_same_group(g, h);
  const auto members = h.members().members();
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem x_inv = g.inverse(x);
    for (Elem m : members) {
      if (!h.contains(g.product(g.product(x, m), x_inv))) return false;
    }
  }
  return true;
}

void require_same_group(const FiniteGroup& g, const Subgroup& h) {
  if (h.group_id() != g.id() || h.members().universe() != g.order()) {
    throw InvalidArgument("subgroup belongs to a different group");
  }
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  require_same_group(g, h);
  const auto members = h.members().members();
  const std::size_t n = members.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = local[g.product(members[i], members[j])];
  }
  return FiniteGroup::from_table(n, std::move(table),
                                 "subgroup of order " + std::to_string(n) + " in " + g.label());
}

}  // namespace csdlab
