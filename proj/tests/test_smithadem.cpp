#include "doctest.h"

#include "towerlab/scenario.hpp"

using namespace towerlab;

namespace {

LatticeAction inversion(int d) {
  std::vector<std::vector<long long>> neg(d, std::vector<long long>(d, 0));
  for (int i = 0; i < d; ++i) neg[i][i] = -1;
  return make_lattice_action(IntMat::from_rows(neg), 2);
}

}  // namespace

TEST_CASE("scenario construction validates the tower data") {
  LatticeAction inv = inversion(2);
  CHECK_THROWS_AS(make_scenario("x", inv, 2, 2, 3), std::invalid_argument);  // p = ell
  CHECK_THROWS_AS(make_scenario("x", inv, 4, 2, 3), std::invalid_argument);  // p not prime
  CHECK_THROWS_AS(make_scenario("x", inv, 3, 2, 0), std::invalid_argument);  // depth
  LatticeAction rot = make_lattice_action(IntMat::from_rows({{0, -1}, {1, -1}}), 3);
  CHECK_THROWS_AS(make_scenario("x", rot, 5, 2, 3), std::invalid_argument);  // order not ell-power
  Scenario s = make_scenario("inv", inv, 3, 2, 3);
  CHECK(s.gamma_desc.str() == GroupDescriptor::free_abelian(2).str());
  CHECK(s.fixed_desc.str() == GroupDescriptor::free_abelian(0).str());
  CHECK(s.lambda == 0);
}

TEST_CASE("cofinal scale validation") {
  CHECK(valid_cofinal_scales({1, 5, 25}, 5));
  CHECK_FALSE(valid_cofinal_scales({1, 25}, 5));   // skips a level
  CHECK_FALSE(valid_cofinal_scales({1, 10}, 5));   // wrong ratio
  CHECK_FALSE(valid_cofinal_scales({5, 25}, 5));   // must start at 1
  CHECK_FALSE(valid_cofinal_scales({}, 5));
}

TEST_CASE("adem right-hand side pins") {
  Scenario s1 = make_scenario("inv1", inversion(1), 3, 2, 3);
  CHECK(adem_rhs(s1, 1, 0) == 2);  // 2 classes x tail of a point
  Scenario s2 = make_scenario("inv2", inversion(2), 3, 2, 3);
  CHECK(adem_rhs(s2, 1, 0) == 4);
  CHECK(adem_rhs(s2, 1, 1) == 0);  // point fixed groups have no higher tail
  CHECK_THROWS_AS(adem_rhs(s2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(adem_rhs(s2, 4, 0), std::invalid_argument);
}

TEST_CASE("smith-floyd bound with equality for full inversion") {
  for (int d = 1; d <= 3; ++d) {
    Scenario s = make_scenario("inv", inversion(d), 3, 2, 3);
    SmithFloydResult r = smith_floyd_check(s, 1, 0);
    CHECK(r.holds);
    CHECK(r.lhs == r.rhs);  // both 2^d
    CHECK(r.lhs == (cpp_int(1) << d));
  }
}

TEST_CASE("full chain inequality across levels and degrees") {
  LatticeAction swap = make_lattice_action(IntMat::from_rows({{0, 1}, {1, 0}}), 2);
  Scenario s = make_scenario("swap", swap, 5, 2, 4);
  for (int n = 1; n <= 4; ++n)
    for (int64_t r = 0; r <= 2; ++r) {
      ChainResult c = chain_inequality(s, n, r);
      CHECK(c.holds);
      CHECK(c.tail_gamma >= c.adem);
      CHECK(c.adem >= c.kernel_bound);
    }
}

TEST_CASE("growth fit flags constant towers as degenerate") {
  Scenario s = make_scenario("inv", inversion(2), 3, 2, 4);
  GrowthReport g = growth_fit(s, 0);
  CHECK(g.degenerate);
  CHECK(g.fitted_exponent == 0.0);
  CHECK(g.predicted == Rational(0));
  CHECK(g.indices.size() == 4);
  CHECK(g.values.size() == 4);
  for (const auto& v : g.values) CHECK(v == 4);
  // indices follow p^{(n-1) d}
  CHECK(g.indices[0] == 1);
  CHECK(g.indices[1] == 9);
  CHECK(g.indices[3] == 729);
}
