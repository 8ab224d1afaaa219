#include <algorithm>
#include <map>

#include "csdlab/errors.hpp"
#include "csdlab/group_expr.hpp"
#include "csdlab/groups.hpp"
#include "csdlab/permutation.hpp"
#include "doctest.h"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace csdlab;

namespace {

std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (Elem x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

std::size_t count_of_order(const FiniteGroup& g, std::size_t k) {
  auto h = order_histogram(g);
  return h.contains(k) ? h[k] : 0;
}

}  // namespace

TEST_CASE("every corpus group has a valid Cayley table") {
  for (const auto& expr : testing::property_corpus()) {
    CAPTURE(expr);
    auto g = group_from_expr(expr);
    CHECK_NOTHROW(validate(g));
    CHECK(g.label() == expr);
  }
}

TEST_CASE("family orders and element-order profiles") {
  CHECK(cyclic(12).order() == 12);
  CHECK(count_of_order(cyclic(12), 12) == 4);
  CHECK(elementary_abelian(3, 3).order() == 27);
  CHECK(count_of_order(elementary_abelian(3, 3), 3) == 26);

  auto d10 = dihedral(5);
  CHECK(d10.order() == 10);
  CHECK(count_of_order(d10, 2) == 5);
  CHECK(count_of_order(dihedral(4), 2) == 5);

  auto q8 = generalized_quaternion(3);
  CHECK(q8.order() == 8);
  CHECK(count_of_order(q8, 2) == 1);
  CHECK(count_of_order(q8, 4) == 6);
  CHECK(count_of_order(generalized_quaternion(5), 2) == 1);

  auto sd16 = quasidihedral(4);
  CHECK(sd16.order() == 16);
  CHECK(count_of_order(sd16, 2) == 5);
  CHECK(count_of_order(sd16, 4) == 6);
  CHECK(count_of_order(sd16, 8) == 4);

  auto m16 = modular_group_M(2, 4);
  CHECK(m16.order() == 16);
  CHECK_FALSE(is_abelian(m16));
  CHECK(count_of_order(m16, 2) == 3);
  CHECK(count_of_order(m16, 8) == 8);
  auto m27 = modular_group_M(3, 3);
  CHECK(count_of_order(m27, 9) == 18);

  auto e27 = heisenberg_E(3);
  CHECK(e27.order() == 27);
  CHECK(count_of_order(e27, 3) == 26);
  CHECK(center(e27).size() == 3);

  auto p = p_group_P(3, 3, 2);
  CHECK(p.order() == 18);
  CHECK_FALSE(is_abelian(p));
  CHECK(center(p).size() == 1);
  CHECK(count_of_order(p, 2) == 9);

  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  CHECK(count_of_order(alternating_group(4), 2) == 3);
}

TEST_CASE("ZM groups") {
  auto g = zm_group(7, 3, 2);
  CHECK(g.order() == 21);
  CHECK_FALSE(is_abelian(g));
  CHECK(center(g).size() == 1);
  CHECK_THROWS_AS(zm_group(7, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(zm_group(4, 2, 3), InvalidArgument);
}

TEST_CASE("P-group exponent is the least r > 1 of order q") {
  CHECK(p_group_exponent(7, 3) == 2);
  CHECK(p_group_exponent(5, 2) == 4);
  CHECK(p_group_exponent(13, 3) == 3);
  CHECK_THROWS_AS(p_group_P(3, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(p_group_P(2, 4, 3), InvalidArgument);
}

TEST_CASE("from_generators builds permutation groups") {
  std::vector<Permutation> gens{Permutation::parse(4, "(0 1 2 3)"), Permutation::parse(4, "(0 2)")};
  auto d8 = from_generators(4, gens);
  CHECK(d8.order() == 8);
  CHECK(count_of_order(d8, 2) == 5);
  CHECK(order_histogram(d8) == order_histogram(dihedral(4)));
}

TEST_CASE("permutation parsing") {
  auto p = Permutation::parse(5, "(0 1 2)(3 4)");
  CHECK(p.to_cycle_string() == "(0 1 2)(3 4)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK((p * p).to_cycle_string() == "(0 2 1)");
  CHECK_THROWS_AS(Permutation::parse(3, "(0 3)"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse(3, "(0 1 0)"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse(3, "(0 1"), InvalidArgument);
}

TEST_CASE("direct products and quotients") {
  auto g = direct_product(symmetric_group(3), cyclic(2));
  CHECK(g.order() == 12);
  CHECK(center(g).size() == 2);
  auto q = quotient(g, center(g));
  CHECK(q.order() == 6);
  CHECK_FALSE(is_abelian(q));
  auto s4 = symmetric_group(4);
  auto a4 = derived_subgroup(s4);
  CHECK(a4.size() == 12);
  CHECK(derived_subgroup(subgroup_as_group(s4, a4)).size() == 4);
  CHECK(quotient(s4, a4).order() == 2);
}

TEST_CASE("from_table rejects non-groups") {
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 1}, "bad"), InvalidArgument);
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {1, 0, 0, 1}, "bad"), InvalidArgument);
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1}, "bad"), InvalidArgument);
  // Latin square with identity 0 that is not associative.
  std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  auto l = FiniteGroup::from_table(5, loop, "loop");
  CHECK_THROWS_AS(validate(l), InvalidArgument);
}

TEST_CASE("guardrail on planned order") {
  Limits tight;
  tight.max_order = 100;
  CHECK_THROWS_AS(cyclic(101, tight), GuardrailError);
  CHECK_THROWS_AS(dihedral(64, tight), GuardrailError);
  CHECK_THROWS_AS(generalized_quaternion(20), GuardrailError);
  try {
    symmetric_group(7, tight);
    FAIL("expected guardrail");
  } catch (const GuardrailError& e) {
    CHECK(e.limit_name() == "max-order");
    CHECK(e.requested() == 5040);
  }
}

TEST_CASE("nilpotency agrees with the upper central series") {
  for (const auto& expr : testing::property_corpus()) {
    CAPTURE(expr);
    auto g = group_from_expr(expr);
    CHECK(is_nilpotent(g) == testing::nilpotent_by_upper_central_series(g));
  }
}

TEST_CASE("relabel preserves structure") {
  std::mt19937_64 rng(7);
  auto g = heisenberg_E(3);
  auto h = testing::random_relabel(g, rng);
  CHECK_NOTHROW(validate(h));
  CHECK(order_histogram(g) == order_histogram(h));
  CHECK(center(h).size() == 3);
}
