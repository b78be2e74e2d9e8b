#include <doctest.h>

#include "support.hpp"

using namespace orbitcert;

TEST_CASE("cayley table construction") {
  auto z2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
  CHECK(z2->order() == 2);
  CHECK(z2->identity() == 0);
  CHECK(z2->inv(0) == 0);
  CHECK(z2->inv(1) == 1);

  auto z3 = FiniteGroup::from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(*z3 == *FiniteGroup::cyclic(3));

  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1, 1}}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1}}), NotAGroup);
  // Latin square but no associativity: x*y = x-y mod 3 is a quasigroup only.
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}), NotAGroup);
}

TEST_CASE("cyclic groups") {
  CHECK(FiniteGroup::cyclic(1)->order() == 1);
  CHECK(*FiniteGroup::cyclic(2) == *FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}));
  auto z12 = FiniteGroup::cyclic(12);
  CHECK(z12->element_order(1) == 12);
  CHECK(z12->element_order(2) == 6);
  CHECK(z12->element_order(0) == 1);
}

TEST_CASE("dihedral groups follow the presentation") {
  auto d3 = FiniteGroup::dihedral(3);
  CHECK(d3->order() == 6);
  const int a = 1, a2 = 2, b = 3;
  CHECK(d3->mul(b, a) == 5);   // ba = a^2 b, last element in {e,a,a^2,b,ab,a^2b}
  CHECK(d3->mul(b, b) == 0);   // b^2 = e
  CHECK(d3->mul(a, a2) == 0);  // a^3 = e
  CHECK(d3->label(5) == "a^2b");

  auto d4 = FiniteGroup::dihedral(4);
  CHECK(d4->order() == 8);
  CHECK(d4->element_order(1) == 4);
}

TEST_CASE("direct products") {
  auto z2 = FiniteGroup::cyclic(2);
  auto klein = FiniteGroup::direct_product(*z2, *z2);
  CHECK(klein->order() == 4);
  for (int i = 1; i < 4; ++i) CHECK(klein->element_order(i) == 2);

  auto z2z3 = FiniteGroup::direct_product(*z2, *FiniteGroup::cyclic(3));
  CHECK(z2z3->order() == 6);
  CHECK(z2z3->is_abelian());
  CHECK_FALSE(FiniteGroup::dihedral(3)->is_abelian());

  auto g = FiniteGroup::dihedral(4);
  auto trivial_times_g = FiniteGroup::direct_product(*FiniteGroup::cyclic(1), *g);
  CHECK(*trivial_times_g == *g);
}

TEST_CASE("element arithmetic") {
  auto z3 = FiniteGroup::cyclic(3);
  GroupElement one{z3, 1}, two{z3, 2};
  CHECK(multiply(one, two).index == 0);

  auto d3 = FiniteGroup::dihedral(3);
  CHECK(inverse(GroupElement{d3, 1}).index == 2);  // a^{-1} = a^2, found in the table
  CHECK(inverse(GroupElement{d3, 0}).index == 0);

  CHECK_THROWS_AS(multiply(GroupElement{z3, 1}, GroupElement{d3, 1}), GroupMismatch);
}

TEST_CASE("group axioms hold for every constructed group") {
  for (const auto& g : testsupport::group_pool()) {
    CHECK_NOTHROW(g->validate());
    for (int i = 0; i < g->order(); ++i) {
      CHECK(g->inv(g->inv(i)) == i);
      CHECK(g->mul(i, g->inv(i)) == g->identity());
    }
  }
  for (int n = 1; n <= 12; ++n) CHECK(FiniteGroup::cyclic(n)->is_abelian());
  for (int m = 3; m <= 8; ++m) CHECK_FALSE(FiniteGroup::dihedral(m)->is_abelian());
}
