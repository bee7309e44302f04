#include "doctest.h"

#include "towerlab/betti.hpp"

using namespace towerlab;

TEST_CASE("descriptor factories validate and render") {
  CHECK_THROWS_AS(GroupDescriptor::free_group(-1), std::invalid_argument);
  CHECK_THROWS_AS(GroupDescriptor::finite_cyclic(0), std::invalid_argument);
  CHECK(GroupDescriptor::trivial().torsion_free());
  CHECK(GroupDescriptor::free_abelian(2).torsion_free());
  CHECK_FALSE(GroupDescriptor::finite_cyclic(4).torsion_free());
}

TEST_CASE("free abelian groups have binomial betti numbers") {
  BettiVector b = betti_mod_l(GroupDescriptor::free_abelian(3), 2);
  REQUIRE(b.finite_support);
  CHECK(b.at(0) == 1);
  CHECK(b.at(1) == 3);
  CHECK(b.at(2) == 3);
  CHECK(b.at(3) == 1);
  CHECK(b.at(4) == 0);
  CHECK(tail_sum(b, 0) == 8);
  CHECK(tail_sum(b, 2) == 4);
}

TEST_CASE("free groups concentrate in degrees 0 and 1") {
  BettiVector b = betti_mod_l(GroupDescriptor::free_group(5), 3);
  CHECK(b.at(0) == 1);
  CHECK(b.at(1) == 5);
  CHECK(b.at(2) == 0);
  CHECK(tail_sum(b, 0) == 6);
}

TEST_CASE("finite cyclic groups mod a dividing prime have infinite support") {
  BettiVector b = betti_mod_l(GroupDescriptor::finite_cyclic(6), 3);
  CHECK_FALSE(b.finite_support);
  CHECK(b.at(0) == 1);
  CHECK(b.at(1) == 1);
  CHECK(b.at(1000) == 1);  // symbolic: every degree contributes one
  CHECK_THROWS_AS(tail_sum(b, 0), std::invalid_argument);  // needs a cap
  CHECK(tail_sum(b, 0, 9) == 10);

  // coprime order: a point mod ell
  BettiVector pt = betti_mod_l(GroupDescriptor::finite_cyclic(5), 3);
  CHECK(pt.finite_support);
  CHECK(tail_sum(pt, 0) == 1);
}

TEST_CASE("kunneth convolution matches the closed form for tori") {
  GroupDescriptor torus = GroupDescriptor::product(
      {GroupDescriptor::free_abelian(1), GroupDescriptor::free_abelian(1)});
  BettiVector via_product = betti_mod_l(torus, 2);
  BettiVector direct = betti_mod_l(GroupDescriptor::free_abelian(2), 2);
  for (int d = 0; d <= 3; ++d) CHECK(via_product.at(d) == direct.at(d));

  // surface-like product: free(2) x Z
  GroupDescriptor prod = GroupDescriptor::product(
      {GroupDescriptor::free_group(2), GroupDescriptor::free_abelian(1)});
  BettiVector b = betti_mod_l(prod, 5);
  CHECK(b.at(0) == 1);
  CHECK(b.at(1) == 3);  // 2 + 1
  CHECK(b.at(2) == 2);  // 2 * 1
  CHECK(b.at(3) == 0);
}

TEST_CASE("ell must be prime") {
  CHECK_THROWS_AS(betti_mod_l(GroupDescriptor::free_abelian(1), 6),
                  std::invalid_argument);
}

TEST_CASE("cohomology of Z with module coefficients") {
  // invertible action with t - 1 invertible: vanishing
  FlModule m{2, 2, {{0, 1}, {1, 1}}};
  CHECK(cohomology_of_Z_with_module(m) == std::make_pair(0, 0));
  // trivial action: full module in both degrees
  FlModule t{3, 2, {{1, 0}, {0, 1}}};
  CHECK(cohomology_of_Z_with_module(t) == std::make_pair(2, 2));
  // non-invertible action is rejected
  FlModule bad{2, 2, {{1, 0}, {0, 0}}};
  CHECK_THROWS_AS(cohomology_of_Z_with_module(bad), std::invalid_argument);
}

TEST_CASE("rank over F_ell") {
  CHECK(rank_mod_ell({{1, 2}, {1, 5}}, 3) == 1);  // det = 3
  CHECK(rank_mod_ell({{1, 2}, {1, 5}}, 5) == 2);
  CHECK(rank_mod_ell({{0, 0}, {0, 0}}, 2) == 0);
}

TEST_CASE("rational euler characteristics") {
  CHECK(euler_char(GroupDescriptor::trivial()) == Rational(1));
  CHECK(euler_char(GroupDescriptor::free_group(3)) == Rational(-2));
  CHECK(euler_char(GroupDescriptor::free_abelian(2)) == Rational(0));
  CHECK(euler_char(GroupDescriptor::finite_cyclic(7)) == Rational(1));
  GroupDescriptor prod = GroupDescriptor::product(
      {GroupDescriptor::free_group(3), GroupDescriptor::free_group(2)});
  CHECK(euler_char(prod) == Rational(2));  // (-2) * (-1)
  CHECK(chi_finite_index(Rational(-1, 12), cpp_int(24)) == Rational(-2));
}
