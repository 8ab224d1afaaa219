#include "csdlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "csdlab/errors.hpp"
#include "csdlab/groups.hpp"

namespace csdlab {
namespace {

void sort_canonical(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), canonical_less);
}

}  // namespace

CyclicPoset cyclic_subgroups(const FiniteGroup& g, const Limits& limits) {
  check_order(g.order(), limits);
  CyclicPoset poset;
  // Elements already known to generate a recorded subgroup are skipped.
  ElementSet covered(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (covered.contains(x)) continue;
    Subgroup s = cyclic_subgroup(g, x);
    const std::uint32_t n = g.element_order(x);
    Elem cur = x;
    for (std::uint32_t k = 1; k <= n; ++k) {
      if (std::gcd(k, n) == 1) covered.insert(cur);
      cur = g.product(cur, x);
    }
    poset.subgroups.push_back(std::move(s));
  }
  sort_canonical(poset.subgroups);
  return poset;
}

SubgroupLattice subgroup_lattice(const FiniteGroup& g, const Limits& limits) {
  check_lattice_order(g.order(), limits);
  auto seeds = cyclic_subgroups(g, limits).subgroups;

  std::vector<Subgroup> all;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto insert = [&](Subgroup s) -> bool {
    if (index.contains(s.members())) return false;
    index.emplace(s.members(), all.size());
    all.push_back(std::move(s));
    return true;
  };
  for (auto& s : seeds) insert(std::move(s));

  // Pending joins ordered by (size, members); each new subgroup is joined
  // with everything known when it is processed, which reaches the fixpoint.
  auto by_size = [&](std::size_t a, std::size_t b) {
    if (all[a].size() != all[b].size()) return all[a].size() < all[b].size();
    if (lex_less(all[a].members(), all[b].members())) return true;
    if (lex_less(all[b].members(), all[a].members())) return false;
    return a < b;
  };
  std::set<std::size_t, decltype(by_size)> pending(by_size);
  for (std::size_t i = 0; i < all.size(); ++i) pending.insert(i);
  std::vector<std::size_t> processed;

  while (!pending.empty()) {
    const std::size_t i = *pending.begin();
    pending.erase(pending.begin());
    for (std::size_t j : processed) {
      const Subgroup& a = all[i];
      const Subgroup& b = all[j];
      if (a.members().is_subset_of(b.members()) || b.members().is_subset_of(a.members())) continue;
      Subgroup joined = join(g, a, b);
      if (insert(std::move(joined))) pending.insert(all.size() - 1);
    }
    processed.push_back(i);
  }

  sort_canonical(all);
  return SubgroupLattice{std::move(all)};
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice) {
  std::vector<Subgroup> out;
  for (const auto& s : lattice.subgroups) {
    if (is_normal(g, s)) out.push_back(s);
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits) {
  return normal_subgroups(g, subgroup_lattice(g, limits));
}

ElementSet product_set(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  require_same_group(g, h);
  require_same_group(g, k);
  ElementSet out(g.order());
  const auto ks = k.members().members();
  h.members().for_each([&](Elem a) {
    for (Elem b : ks) out.insert(g.product(a, b));
  });
  return out;
}

bool permutes(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  require_same_group(g, h);
  require_same_group(g, k);
  if (h.members().is_subset_of(k.members()) || k.members().is_subset_of(h.members())) return true;
  const std::size_t meet = h.members().intersection_count(k.members());
  const std::size_t product_size = h.size() * k.size() / meet;
  if (g.order() % product_size != 0) return false;
  const ElementSet hk = product_set(g, h, k);
  bool contained = true;
  const auto hs = h.members().members();
  k.members().for_each([&](Elem b) {
    if (!contained) return;
    for (Elem a : hs) {
      if (!hk.contains(g.product(b, a))) {
        contained = false;
        return;
      }
    }
  });
  return contained;
}

std::vector<Subgroup> c1(const FiniteGroup& g, const Subgroup& h, const CyclicPoset& poset) {
  std::vector<Subgroup> out;
  for (const auto& k : poset.subgroups) {
    if (permutes(g, h, k)) out.push_back(k);
  }
  return out;
}

RightCosets right_cosets(const FiniteGroup& g, const Subgroup& h) {
  require_same_group(g, h);
  constexpr Elem kUnassigned = ~Elem{0};
  RightCosets rc;
  rc.coset_of.assign(g.order(), kUnassigned);
  const auto hs = h.members().members();
  for (Elem x = 0; x < g.order(); ++x) {
    if (rc.coset_of[x] != kUnassigned) continue;
    const auto id = static_cast<Elem>(rc.cosets.size());
    ElementSet coset(g.order());
    for (Elem a : hs) {
      const Elem y = g.product(a, x);
      coset.insert(y);
      rc.coset_of[y] = id;
    }
    rc.cosets.push_back(std::move(coset));
  }
  return rc;
}

PermutabilityTable::PermutabilityTable(const FiniteGroup& g, std::span<const Subgroup> subgroups)
    : group_(&g), subgroups_(subgroups) {
  cosets_.reserve(subgroups.size());
  for (const auto& s : subgroups) cosets_.push_back(right_cosets(g, s));
}

bool PermutabilityTable::permutes(std::size_t i, std::size_t j) const {
  const Subgroup& h = subgroups_[i];
  const Subgroup& k = subgroups_[j];
  if (h.members().is_subset_of(k.members()) || k.members().is_subset_of(h.members())) return true;
  const std::size_t meet = h.members().intersection_count(k.members());
  const std::size_t product_size = h.size() * k.size() / meet;
  if (group_->order() % product_size != 0) return false;

  // HK as a union of right cosets of H.
  const RightCosets& h_cosets = cosets_[i];
  ElementSet hk(group_->order());
  k.members().for_each([&](Elem b) {
    if (!hk.contains(b)) hk |= h_cosets.cosets[h_cosets.coset_of[b]];
  });
  // KH has the same size, so KH = HK iff every right coset Ka (a ∈ H) lies in HK.
  const RightCosets& k_cosets = cosets_[j];
  bool contained = true;
  h.members().for_each([&](Elem a) {
    if (contained && !k_cosets.cosets[k_cosets.coset_of[a]].is_subset_of(hk)) contained = false;
  });
  return contained;
}

void for_each_section(const FiniteGroup& g, const SubgroupLattice& lattice,
                      const std::function<bool(const Section&)>& visit) {
  const auto& subs = lattice.subgroups;
  for (std::size_t hi = 0; hi < subs.size(); ++hi) {
    const Subgroup& h = subs[hi];
    const FiniteGroup h_group = subgroup_as_group(g, h);
    const auto h_members = h.members().members();
    std::vector<Elem> local(g.order(), 0);
    for (std::size_t i = 0; i < h_members.size(); ++i) local[h_members[i]] = static_cast<Elem>(i);

    for (std::size_t ni = 0; ni <= hi; ++ni) {
      const Subgroup& n = subs[ni];
      if (h.size() % n.size() != 0 || !n.members().is_subset_of(h.members())) continue;
      bool normal = true;
      const auto n_members = n.members().members();
      for (Elem x : h_members) {
        const Elem x_inv = g.inverse(x);
        for (Elem m : n_members) {
          if (!n.contains(g.product(g.product(x, m), x_inv))) {
            normal = false;
            break;
          }
        }
        if (!normal) break;
      }
      if (!normal) continue;

      ElementSet n_local(h_group.order());
      for (Elem m : n_members) n_local.insert(local[m]);
      Section section{hi, ni, quotient(h_group, Subgroup::trusted(h_group, std::move(n_local)))};
      if (!visit(section)) return;
    }
  }
}

void for_each_section(const FiniteGroup& g, const Limits& limits,
                      const std::function<bool(const Section&)>& visit) {
  check_sections_order(g.order(), limits);
  for_each_section(g, subgroup_lattice(g, limits), visit);
}

}  // namespace csdlab
