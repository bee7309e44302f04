#include "doctest.h"

#include "towerlab/arith.hpp"

using namespace towerlab;

TEST_CASE("number field data validates place counts") {
  NumberFieldData q = NumberFieldData::make(1, 0);
  CHECK(q.degree == 1);
  NumberFieldData im = NumberFieldData::make(0, 1, {2, 3});
  CHECK(im.degree == 2);
  CHECK(im.contains_mu(3));
  CHECK_FALSE(im.contains_mu(5));
  CHECK_THROWS_AS(NumberFieldData::make(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(NumberFieldData::make(0, 0), std::invalid_argument);
}

TEST_CASE("built-in split group table") {
  SplitGroupData sl2 = builtin_group("SL", 2);
  CHECK(sl2.dim == 3);
  CHECK(sl2.dim_compact == 1);
  CHECK(sl2.rank == 1);
  CHECK(sl2.has_ds);
  CHECK(sl2.q() == Rational(1));

  SplitGroupData sl3 = builtin_group("SL", 3);
  CHECK(sl3.dim == 8);
  CHECK(sl3.dim_compact == 3);
  CHECK_FALSE(sl3.has_ds);
  CHECK(sl3.q() == Rational(5, 2));

  SplitGroupData sp4 = builtin_group("Sp", 4);
  CHECK(sp4.dim == 10);
  CHECK(sp4.dim_compact == 4);
  CHECK(sp4.rank == 2);
  CHECK(sp4.has_ds);

  SplitGroupData so5 = builtin_group("SO", 5);
  CHECK(so5.dim == 10);

  CHECK_THROWS_AS(builtin_group("SL", 1), std::invalid_argument);
  CHECK_THROWS_AS(builtin_group("Sp", 3), std::invalid_argument);
  CHECK_THROWS_AS(builtin_group("SO", 2), std::invalid_argument);
  CHECK_THROWS_AS(builtin_group("E8", 8), std::invalid_argument);
}

TEST_CASE("congruence index closed form") {
  // |SL_2(Z/p)| = p(p^2-1)
  CHECK(congruence_index("SL", 2, 3, 1) == 24);
  CHECK(congruence_index("SL", 2, 5, 1) == 120);
  // each level multiplies by p^{n^2-1}
  CHECK(congruence_index("SL", 2, 3, 2) == 24 * 27);
  CHECK(congruence_index("SL", 2, 3, 3) == 24 * 27 * 27);
  // |SL_3(Z/3)| = 3^3 (3^2-1)(3^3-1)
  CHECK(congruence_index("SL", 3, 3, 1) == 5616);
  CHECK(congruence_index("SL", 1, 7, 2) == 1);

  CHECK_THROWS_AS(congruence_index("Sp", 2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(congruence_index("SL", 2, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(congruence_index("SL", 2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(congruence_index("SL", 0, 3, 1), std::invalid_argument);
}

TEST_CASE("generic growth exponent and its guard rails") {
  CHECK(theorem1_exponent(3, 0, 3, Rational(1)) == Rational(1));
  CHECK(theorem1_exponent(4, 1, 8, Rational(1, 2)) == Rational(3, 16));
  CHECK(theorem1_exponent(0, 0, 5, Rational(1)) == Rational(0));
  CHECK_THROWS_AS(theorem1_exponent(4, 5, 8, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_exponent(9, 0, 8, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_exponent(4, 0, 0, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_exponent(4, 0, 8, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_exponent(4, 0, 8, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("base change halves the exponent per quadratic step") {
  SplitGroupData sl2 = builtin_group("SL", 2);
  CHECK(basechange_exponent(0, sl2).exponent == Rational(1));
  CHECK(basechange_exponent(3, sl2).exponent == Rational(1, 8));
  CHECK(basechange_exponent(1, sl2).start_degree == Rational(1));
  CHECK_THROWS_AS(basechange_exponent(-1, sl2), std::invalid_argument);
  // SL_3 has no discrete series, so lifting data is unavailable
  CHECK_THROWS_AS(basechange_exponent(1, builtin_group("SL", 3)),
                  std::invalid_argument);
}

TEST_CASE("special linear tower report") {
  NumberFieldData f = NumberFieldData::make(1, 0);           // Q
  NumberFieldData e = NumberFieldData::make(2, 0);           // real quadratic
  Sl2nReport r = sl2n_example_report(1, 1, f, e);
  CHECK(r.exponent == Rational(1, 2));
  CHECK(r.start_degree == 1);
  CHECK(r.vcd == 3);

  NumberFieldData e0 = NumberFieldData::make(1, 0);
  Sl2nReport r2 = sl2n_example_report(2, 0, f, e0);
  CHECK(r2.exponent == Rational(2, 3));  // 10/15
  CHECK(r2.start_degree == 3);
  CHECK(r2.vcd == 6);

  CHECK_THROWS_AS(sl2n_example_report(0, 1, f, e), std::invalid_argument);
  CHECK_THROWS_AS(sl2n_example_report(1, -1, f, e), std::invalid_argument);
  // degree mismatch: [E:Q] must be 2^m [F:Q]
  CHECK_THROWS_AS(sl2n_example_report(1, 2, f, e), std::invalid_argument);
  // F must be totally real
  NumberFieldData bad = NumberFieldData::make(0, 1);
  NumberFieldData e4 = NumberFieldData::make(4, 0);
  CHECK_THROWS_AS(sl2n_example_report(1, 1, bad, e4), std::invalid_argument);
}

TEST_CASE("split group exponents over fields with roots of unity") {
  NumberFieldData f = NumberFieldData::make(0, 1, {2, 3});  // imaginary quadratic
  SplitGroupData sl2 = builtin_group("SL", 2);
  SplitGroupsResult r = split_groups_exponent(sl2, f, 1, 3);
  CHECK(r.alpha == Rational(1, 3));  // 1*(2-1+1)/(3*2)
  CHECK(r.start_degree == 0);
  CHECK(r.lambda == 0);

  SplitGroupsResult r2 = split_groups_exponent(sl2, f, 2, 3);
  CHECK(r2.alpha == Rational(1, 6));
  CHECK(r2.start_degree == 1);

  CHECK_THROWS_AS(split_groups_exponent(sl2, f, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(split_groups_exponent(sl2, f, 3, 3), std::invalid_argument);
  // field without the ell-th roots of unity
  NumberFieldData q = NumberFieldData::make(1, 0, {2});
  CHECK_THROWS_AS(split_groups_exponent(sl2, q, 1, 3), std::invalid_argument);
}

TEST_CASE("unit rank and filtration step helpers") {
  CHECK(dirichlet_unit_rank(2, 3) == 4);
  CHECK(dirichlet_unit_rank(1, 1) == 0);
  CHECK_THROWS_AS(dirichlet_unit_rank(2, 0), std::invalid_argument);
  CHECK(frattini_step(1) == 1);
  CHECK(frattini_step(2) == 2);
  CHECK_THROWS_AS(frattini_step(0), std::invalid_argument);
}
