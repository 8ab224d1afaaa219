#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "csdlab/finite_group.hpp"
#include "csdlab/limits.hpp"
#include "csdlab/subgroup.hpp"

namespace csdlab {

// L_1(G): one entry per distinct cyclic subgroup, in canonical order.
struct CyclicPoset {
  std::vector<Subgroup> subgroups;
  std::size_t size() const noexcept { return subgroups.size(); }
};

// L(G): every subgroup, in canonical order.
struct SubgroupLattice {
  std::vector<Subgroup> subgroups;
  std::size_t size() const noexcept { return subgroups.size(); }
};

CyclicPoset cyclic_subgroups(const FiniteGroup& g, const Limits& limits = {});

// Join closure seeded with the cyclic subgroups; new joins are processed in
// ascending size order until no pair yields a new subgroup.
SubgroupLattice subgroup_lattice(const FiniteGroup& g, const Limits& limits = {});

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits = {});
// Normal members of an already computed lattice.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice);

// The product set HK, built element by element.
ElementSet product_set(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// HK = KH. Rejects early when |H||K|/|H∩K| does not divide |G|.
bool permutes(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// C_1(H): the members of the poset permuting with h.
std::vector<Subgroup> c1(const FiniteGroup& g, const Subgroup& h, const CyclicPoset& poset);

// Right-coset decomposition G = ⋃ H g_i.
struct RightCosets {
  std::vector<Elem> coset_of;       // element -> coset id
  std::vector<ElementSet> cosets;   // coset id -> members
};

RightCosets right_cosets(const FiniteGroup& g, const Subgroup& h);

// Permutability over a fixed list of subgroups, with each subgroup's right
// cosets precomputed so that HK is assembled from whole coset bitsets:
// HK = ⋃_{k ∈ K} Hk, and KH ⊆ HK is checked coset by coset.
class PermutabilityTable {
 public:
  PermutabilityTable(const FiniteGroup& g, std::span<const Subgroup> subgroups);

  std::size_t size() const noexcept { return subgroups_.size(); }
  bool permutes(std::size_t i, std::size_t j) const;

 private:
  const FiniteGroup* group_;
  std::span<const Subgroup> subgroups_;
  std::vector<RightCosets> cosets_;
};

struct Section {
  std::size_t subgroup_index;  // H, into the lattice
  std::size_t normal_index;    // N ⊴ H, into the lattice
  FiniteGroup group;           // H/N
};

// Calls visit(section) for every H ≤ G and N ⊴ H. Isomorphic duplicates are
// not removed. Returning false from visit stops the enumeration.
void for_each_section(const FiniteGroup& g, const Limits& limits,
                      const std::function<bool(const Section&)>& visit);
void for_each_section(const FiniteGroup& g, const SubgroupLattice& lattice,
                      const std::function<bool(const Section&)>& visit);

}  // namespace csdlab
