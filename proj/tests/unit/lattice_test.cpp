#include <algorithm>
#include <set>

#include "csdlab/errors.hpp"
#include "csdlab/group_expr.hpp"
#include "csdlab/groups.hpp"
#include "csdlab/lattice.hpp"
#include "doctest.h"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace csdlab;

namespace {

std::set<testing::ElemSet> as_sets(const std::vector<Subgroup>& subs) {
  std::set<testing::ElemSet> out;
  for (const auto& s : subs) {
    auto m = s.members().members();
    out.emplace(m.begin(), m.end());
  }
  return out;
}

}  // namespace

TEST_CASE("lattice and poset sizes of small groups") {
  struct Row {
    const char* expr;
    std::size_t lattice;
    std::size_t cyclic;
    std::size_t normal;
  };
  const Row rows[] = {
      {"Z(1)", 1, 1, 1},    {"Z(12)", 6, 6, 6},  {"S(3)", 6, 5, 3},     {"D(8)", 10, 7, 6},
      {"Q(8)", 6, 5, 6},    {"A(4)", 10, 8, 3},  {"S(4)", 30, 17, 4},   {"A(5)", 59, 32, 2},
      {"Ea(2,3)", 16, 8, 16}, {"D(12)", 16, 10, 7}, {"E(27)", 19, 14, 7},
  };
  for (const auto& r : rows) {
    CAPTURE(r.expr);
    auto g = group_from_expr(r.expr);
    CHECK(subgroup_lattice(g).size() == r.lattice);
    CHECK(cyclic_subgroups(g).size() == r.cyclic);
    CHECK(normal_subgroups(g).size() == r.normal);
  }
}

TEST_CASE("subgroups are listed in canonical order without repeats") {
  for (const char* expr : {"S(4)", "D(16)", "Ea(2,3)", "Q(16)xZ(3)"}) {
    auto lat = subgroup_lattice(group_from_expr(expr));
    for (std::size_t i = 1; i < lat.size(); ++i) CHECK(canonical_less(lat.subgroups[i - 1], lat.subgroups[i]));
  }
}

TEST_CASE("cyclic subgroups match the power-set oracle") {
  for (const auto& expr : testing::property_corpus()) {
    CAPTURE(expr);
    auto g = group_from_expr(expr);
    auto naive = testing::cyclic_subgroups_naive(g);
    auto ours = as_sets(cyclic_subgroups(g).subgroups);
    CHECK(ours == std::set<testing::ElemSet>(naive.begin(), naive.end()));
  }
}

TEST_CASE("normal subgroups match conjugation oracle") {
  for (const char* expr : {"S(4)", "D(16)", "Q(16)", "A(4)xZ(2)", "P(3,3,2)"}) {
    CAPTURE(expr);
    auto g = group_from_expr(expr);
    std::set<testing::ElemSet> expected;
    for (const auto& s : as_sets(subgroup_lattice(g).subgroups)) {
      if (testing::is_normal_naive(g, s)) expected.insert(s);
    }
    CHECK(as_sets(normal_subgroups(g)) == expected);
  }
}

TEST_CASE("permutability routes agree") {
  for (const char* expr : {"S(4)", "D(12)", "Q(16)", "M(27)", "SD(16)", "P(2,7,3)"}) {
    CAPTURE(expr);
    auto g = group_from_expr(expr);
    auto lat = subgroup_lattice(g);
    PermutabilityTable table(g, lat.subgroups);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto hi = lat.subgroups[i].members().members();
      testing::ElemSet h(hi.begin(), hi.end());
      for (std::size_t j = 0; j < lat.size(); ++j) {
        auto kj = lat.subgroups[j].members().members();
        testing::ElemSet k(kj.begin(), kj.end());
        const bool naive = testing::permutes_naive(g, h, k);
        CHECK(table.permutes(i, j) == naive);
        CHECK(permutes(g, lat.subgroups[i], lat.subgroups[j]) == naive);
      }
    }
  }
}

TEST_CASE("right cosets partition the group") {
  auto g = symmetric_group(4);
  for (const auto& h : subgroup_lattice(g).subgroups) {
    auto rc = right_cosets(g, h);
    CHECK(rc.cosets.size() * h.size() == g.order());
    std::size_t total = 0;
    for (std::size_t c = 0; c < rc.cosets.size(); ++c) {
      total += rc.cosets[c].count();
      rc.cosets[c].for_each([&](Elem e) { CHECK(rc.coset_of[e] == c); });
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("section enumeration") {
  std::size_t count = 0;
  std::size_t trivial_quotients = 0;
  for_each_section(symmetric_group(3), Limits{}, [&](const Section& s) {
    ++count;
    trivial_quotients += s.group.order() == 1 ? 1 : 0;
    return true;
  });
  CHECK(count == 12);
  CHECK(trivial_quotients == 6);

  std::size_t seen = 0;
  for_each_section(symmetric_group(4), Limits{}, [&](const Section&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("lattice and section guardrails") {
  Limits tight;
  tight.max_lattice_order = 20;
  tight.max_sections_order = 10;
  CHECK_THROWS_AS(subgroup_lattice(symmetric_group(4), tight), GuardrailError);
  CHECK_NOTHROW(subgroup_lattice(dihedral(8), tight));
  CHECK_THROWS_AS(for_each_section(dihedral(8), tight, [](const Section&) { return true; }), GuardrailError);
}
