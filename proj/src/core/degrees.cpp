#include "csdlab/degrees.hpp"

#include <numeric>

#include "csdlab/errors.hpp"
#include "csdlab/groups.hpp"
#include "csdlab/parallel.hpp"
#include "csdlab/simd/kernels.hpp"

namespace csdlab {
namespace {

Degree ratio(std::uint64_t num, std::uint64_t den) { return Degree(BigInt(num), BigInt(den)); }

Degree census_degree(const PairCensus& census) {
  const BigInt n = census.subgroup_count;
  return Degree(BigInt(census.permuting_pairs), n * n);
}

bool is_abelian_set(const FiniteGroup& g, const ElementSet& members) {
  const auto xs = members.members();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (g.product(xs[i], xs[j]) != g.product(xs[j], xs[i])) return false;
    }
  }
  return true;
}

}  // namespace

PairCensus permutability_census(const FiniteGroup& g, std::span<const Subgroup> subgroups,
                                unsigned jobs) {
  const std::size_t n = subgroups.size();
  const PermutabilityTable table(g, subgroups);
  const std::size_t workers = worker_count(n, jobs);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n, 0));

  parallel_for(n, jobs, [&](std::size_t w, std::size_t i) {
    auto& counts = partial[w];
    ++counts[i];  // H permutes with itself
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table.permutes(i, j)) {
        ++counts[i];
        ++counts[j];
      }
    }
  });

  PairCensus census;
  census.subgroup_count = n;
  census.per_subgroup.assign(n, 0);
  for (const auto& counts : partial) {
    for (std::size_t i = 0; i < n; ++i) census.per_subgroup[i] += counts[i];
  }
  census.permuting_pairs =
      std::accumulate(census.per_subgroup.begin(), census.per_subgroup.end(), std::uint64_t{0});
  return census;
}

Degree csd(const FiniteGroup& g, const CyclicPoset& poset, unsigned jobs) {
  return census_degree(permutability_census(g, poset.subgroups, jobs));
}

Degree csd(const FiniteGroup& g, const Limits& limits, unsigned jobs) {
  return csd(g, cyclic_subgroups(g, limits), jobs);
}

Degree sd(const FiniteGroup& g, const SubgroupLattice& lattice, unsigned jobs) {
  return census_degree(permutability_census(g, lattice.subgroups, jobs));
}

Degree sd(const FiniteGroup& g, const Limits& limits, unsigned jobs) {
  return sd(g, subgroup_lattice(g, limits), jobs);
}

Degree ndeg(const FiniteGroup& g, const Limits& limits) {
  const auto lattice = subgroup_lattice(g, limits);
  return ratio(normal_subgroups(g, lattice).size(), lattice.size());
}

Degree cdeg(const FiniteGroup& g, const Limits& limits) {
  const auto lattice = subgroup_lattice(g, limits);
  return ratio(cyclic_subgroups(g, limits).size(), lattice.size());
}

Degree d(const FiniteGroup& g, unsigned jobs) {
  const std::size_t n = g.order();
  std::vector<Elem> transposed(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) transposed[b * n + a] = g.product(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  const auto& kernels = simd::active_kernels();
  std::vector<std::uint64_t> partial(worker_count(n, jobs), 0);
  parallel_for(n, jobs, [&](std::size_t w, std::size_t a) {
    partial[w] += kernels.count_equal_u32(g.row(static_cast<Elem>(a)).data(), transposed.data() + a * n, n);
  });
  const std::uint64_t commuting = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  return ratio(commuting, static_cast<std::uint64_t>(n) * n);
}

bool is_iwasawa(const FiniteGroup& g, const Limits& limits, unsigned jobs) {
  const bool sd_one = sd(g, limits, jobs) == Degree::one();
  const bool csd_one = csd(g, limits, jobs) == Degree::one();
  if (sd_one != csd_one) {
    throw InternalError(g.label() + ": csd = 1 and sd = 1 disagree");
  }
  return sd_one;
}

Degree csd_star(const FiniteGroup& g, const Limits& limits) {
  Degree best = Degree::one();
  for_each_section(g, limits, [&](const Section& s) {
    const Degree value = csd(s.group, limits);
    if (value < best) best = value;
    return true;
  });
  return best;
}

Degree csd_coprime_product(std::span<const Degree> factors) {
  Degree result = Degree::one();
  for (const auto& f : factors) result = result * f;
  return result;
}

LowerBounds lower_bounds(const FiniteGroup& g, const Limits& limits) {
  const auto poset = cyclic_subgroups(g, limits);
  const auto lattice = subgroup_lattice(g, limits);
  const std::uint64_t l1 = poset.size();

  std::uint64_t normal_cyclic = 0;
  for (const auto& h : poset.subgroups) normal_cyclic += is_normal(g, h) ? 1 : 0;

  std::uint64_t best_inside = 1;
  for (const auto& m : lattice.subgroups) {
    if (!is_abelian_set(g, m.members())) continue;
    std::uint64_t inside = 0;
    for (const auto& h : poset.subgroups) inside += h.members().is_subset_of(m.members()) ? 1 : 0;
    best_inside = std::max(best_inside, inside);
  }

  return LowerBounds{
      ratio(normal_cyclic, l1),
      ratio(2 * l1 - 1, l1 * l1),
      ratio(best_inside * best_inside, l1 * l1),
  };
}

}  // namespace csdlab
