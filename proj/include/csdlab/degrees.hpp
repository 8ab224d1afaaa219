#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "csdlab/degree.hpp"
#include "csdlab/finite_group.hpp"
#include "csdlab/lattice.hpp"
#include "csdlab/limits.hpp"

namespace csdlab {

// Counts of permuting pairs over a list of subgroups.
struct PairCensus {
  std::size_t subgroup_count = 0;
  std::uint64_t permuting_pairs = 0;             // ordered pairs, diagonal included
  std::vector<std::uint64_t> per_subgroup;       // |{K : HK = KH}| for each H
};

// Exhaustive census over all ordered pairs. Rows are spread over `jobs`
// threads; the merge is integer addition, so the result does not depend on
// scheduling.
PairCensus permutability_census(const FiniteGroup& g, std::span<const Subgroup> subgroups,
                                unsigned jobs = 1);

// csd(G) = (1 / |L_1|^2) * sum over H in L_1 of |C_1(H)|.
Degree csd(const FiniteGroup& g, const Limits& limits = {}, unsigned jobs = 1);
Degree csd(const FiniteGroup& g, const CyclicPoset& poset, unsigned jobs = 1);

// sd(G), the same probability over all of L(G).
Degree sd(const FiniteGroup& g, const Limits& limits = {}, unsigned jobs = 1);
Degree sd(const FiniteGroup& g, const SubgroupLattice& lattice, unsigned jobs = 1);

// |N(G)| / |L(G)|
Degree ndeg(const FiniteGroup& g, const Limits& limits = {});
// |L_1(G)| / |L(G)|
Degree cdeg(const FiniteGroup& g, const Limits& limits = {});

// Probability that two elements commute.
Degree d(const FiniteGroup& g, unsigned jobs = 1);

// sd(G) == 1. csd(G) == 1 is computed as well; disagreement throws
// InternalError.
bool is_iwasawa(const FiniteGroup& g, const Limits& limits = {}, unsigned jobs = 1);

// Minimum of csd over all sections H/N, G itself included.
Degree csd_star(const FiniteGroup& g, const Limits& limits = {});

// Product of the factors' degrees. The caller certifies the factor groups
// have pairwise coprime orders.
Degree csd_coprime_product(std::span<const Degree> factors);

struct LowerBounds {
  Degree normal_cyclic;      // |N(G) ∩ L_1(G)| / |L_1(G)|
  Degree cyclic_count;       // (2|L_1(G)| - 1) / |L_1(G)|^2
  Degree abelian_subgroup;   // max over abelian M of (|L_1(M)| / |L_1(G)|)^2
};

LowerBounds lower_bounds(const FiniteGroup& g, const Limits& limits = {});

}  // namespace csdlab
