#include "support/properties.hpp"

#include <random>

#include "csdlab/degrees.hpp"
#include "csdlab/group_expr.hpp"
#include "csdlab/groups.hpp"
#include "csdlab/lattice.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace csdlab::testing {
namespace {

constexpr std::uint64_t kSeed = 0x5eed2026;

void record(PropertyOutcome& p, bool ok, const std::string& where) {
  ++p.cases;
  if (ok) return;
  if (p.failures++ == 0) p.first_failure = where;
}

// Up to `count` random (i, j) index pairs, always including the extremes.
std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::size_t count,
                                                               std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> out{{0, n - 1}, {n - 1, 0}};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (out.size() < count) out.emplace_back(pick(rng), pick(rng));
  return out;
}

}  // namespace

PropertyOutcome check_permutes_symmetric() {
  PropertyOutcome p{"permutes symmetry"};
  std::mt19937_64 rng(kSeed);
  for (const auto& expr : property_corpus()) {
    const auto g = group_from_expr(expr);
    const auto lat = subgroup_lattice(g);
    PermutabilityTable table(g, lat.subgroups);
    bool ok = true;
    for (auto [i, j] : sample_pairs(lat.size(), 40, rng)) {
      ok = ok && table.permutes(i, j) == table.permutes(j, i);
      ok = ok && permutes(g, lat.subgroups[i], lat.subgroups[j]) == permutes(g, lat.subgroups[j], lat.subgroups[i]);
    }
    record(p, ok, expr);
  }
  return p;
}

PropertyOutcome check_product_size() {
  PropertyOutcome p{"|HK| = |H||K|/|H meet K|"};
  std::mt19937_64 rng(kSeed + 1);
  for (const auto& expr : property_corpus()) {
    const auto g = group_from_expr(expr);
    const auto lat = subgroup_lattice(g);
    bool ok = true;
    for (auto [i, j] : sample_pairs(lat.size(), 40, rng)) {
      const auto& h = lat.subgroups[i];
      const auto& k = lat.subgroups[j];
      const std::size_t meet = h.members().intersection_count(k.members());
      ok = ok && product_set(g, h, k).count() * meet == h.size() * k.size();
    }
    record(p, ok, expr);
  }
  return p;
}

PropertyOutcome check_c1_contains_subgroups_and_normal_cyclics() {
  PropertyOutcome p{"L(H) and normal cyclics inside C1(H)"};
  for (const auto& expr : property_corpus()) {
    const auto g = group_from_expr(expr);
    const auto poset = cyclic_subgroups(g);
    std::vector<bool> normal(poset.size());
    for (std::size_t k = 0; k < poset.size(); ++k) normal[k] = is_normal(g, poset.subgroups[k]);
    bool ok = true;
    for (const auto& h : poset.subgroups) {
      const auto members = c1(g, h, poset);
      auto in_c1 = [&](const Subgroup& k) {
        for (const auto& m : members) {
          if (m == k) return true;
        }
        return false;
      };
      for (std::size_t k = 0; k < poset.size(); ++k) {
        const auto& cand = poset.subgroups[k];
        const bool below = cand.members().is_subset_of(h.members());
        if (below || normal[k]) ok = ok && in_c1(cand);
      }
    }
    record(p, ok, expr);
  }
  return p;
}

PropertyOutcome check_lower_bounds() {
  PropertyOutcome p{"three lower bounds on csd"};
  for (const auto& expr : property_corpus()) {
    const auto g = group_from_expr(expr);
    const Degree value = csd(g);
    const auto b = lower_bounds(g);
    record(p, b.normal_cyclic <= value && b.cyclic_count <= value && b.abelian_subgroup <= value, expr);
  }
  return p;
}

PropertyOutcome check_csd_one_iff_sd_one() {
  PropertyOutcome p{"csd = 1 iff sd = 1"};
  for (const auto& expr : property_corpus()) {
    const auto g = group_from_expr(expr);
    record(p, (csd(g) == Degree::one()) == (sd(g) == Degree::one()), expr);
  }
  return p;
}

PropertyOutcome check_coprime_multiplicativity() {
  PropertyOutcome p{"csd multiplicative on coprime products"};
  for (const auto& [a, b] : coprime_pairs()) {
    const auto ga = group_from_expr(a);
    const auto gb = group_from_expr(b);
    const Degree product = csd(direct_product(ga, gb));
    const std::vector<Degree> factors{csd(ga), csd(gb)};
    record(p, product == csd_coprime_product(factors), a + " x " + b);
  }
  return p;
}

PropertyOutcome check_relabel_invariance() {
  PropertyOutcome p{"csd invariant under relabeling"};
  std::mt19937_64 rng(kSeed + 2);
  for (const auto& expr : property_corpus()) {
    const auto g = group_from_expr(expr);
    const Degree before = csd(g);
    const auto h = random_relabel(g, rng);
    record(p, csd(h) == before && sd(h) == sd(g), expr);
  }
  return p;
}

PropertyOutcome check_lagrange() {
  PropertyOutcome p{"Lagrange invariants"};
  for (const auto& expr : property_corpus()) {
    const auto g = group_from_expr(expr);
    bool ok = true;
    for (const auto& h : subgroup_lattice(g).subgroups) {
      ok = ok && g.order() % h.size() == 0;
      ok = ok && right_cosets(g, h).cosets.size() * h.size() == g.order();
      h.members().for_each([&](Elem e) { ok = ok && h.size() % g.element_order(e) == 0; });
    }
    record(p, ok, expr);
  }
  return p;
}

std::vector<PropertyOutcome> run_all_properties() {
  return {check_permutes_symmetric(),     check_product_size(),
          check_c1_contains_subgroups_and_normal_cyclics(), check_lower_bounds(),
          check_csd_one_iff_sd_one(),     check_coprime_multiplicativity(),
          check_relabel_invariance(),     check_lagrange()};
}

}  // namespace csdlab::testing
