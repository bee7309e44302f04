#include "doctest.h"

#include <cstdlib>

#include "towerlab/group.hpp"

using namespace towerlab;

TEST_CASE("closure builds cyclic groups deterministically") {
  GroupPtr g = abelian_group(7, 1);
  CHECK(g->size() == 7);
  CHECK(g->elems[0] == g->identity);  // identity always first
  CHECK(g->index_of({0}) == 0);
  // inverse and multiplication are consistent
  for (int i = 0; i < 7; ++i) CHECK(g->mul(i, g->inv(i)) == 0);
}

TEST_CASE("closure rejects empty generator lists and enforces the cap") {
  MulFn addm = [](const Enc& a, const Enc& b) { return Enc{(a[0] + b[0]) % 101}; };
  CHECK_THROWS_AS(closure({}, addm, Enc{0}), std::invalid_argument);
  CHECK_THROWS_AS(closure({Enc{1}}, addm, Enc{0}, 10), std::runtime_error);
}

TEST_CASE("element cap honors the environment override") {
  setenv("TOWERLAB_ELEMENT_CAP", "12345", 1);
  CHECK(closure_cap() == 12345);
  unsetenv("TOWERLAB_ELEMENT_CAP");
  CHECK(closure_cap() == kDefaultClosureCap);
}

TEST_CASE("element orders and p-group detection") {
  GroupPtr g = abelian_group(9, 2);
  CHECK(g->size() == 81);
  CHECK(g->element_order(g->index_of({1, 0})) == 9);
  CHECK(g->element_order(g->index_of({3, 0})) == 3);
  int64_t p = 0;
  CHECK(g->is_p_group(&p));
  CHECK(p == 3);
  CHECK_FALSE(abelian_group(6, 1)->is_p_group());
}

TEST_CASE("congruence kernels have the predicted order") {
  // |ker(SL_n(Z/p^k) -> SL_n(Z/p^m))| = p^{dim (k-m)}
  CHECK(congruence_kernel(MatrixFamily::SL, 2, PrimePower::make(3, 2), 1)->size() == 27);
  CHECK(congruence_kernel(MatrixFamily::SL, 2, PrimePower::make(3, 3), 1)->size() == 729);
  CHECK(congruence_kernel(MatrixFamily::SL, 2, PrimePower::make(3, 3), 2)->size() == 27);
  CHECK(congruence_kernel(MatrixFamily::GL, 2, PrimePower::make(3, 2), 1)->size() == 81);
  CHECK(congruence_kernel(MatrixFamily::Sp, 2, PrimePower::make(3, 2), 1)->size() == 27);
  // m = k: trivial kernel
  CHECK(congruence_kernel(MatrixFamily::SL, 2, PrimePower::make(5, 2), 2)->size() == 1);
  // p = 2 is outside the supported uniform regime
  CHECK_THROWS_AS(congruence_kernel(MatrixFamily::SL, 2, PrimePower::make(2, 3), 1),
                  std::invalid_argument);
}

TEST_CASE("kernel elements reduce to the identity at the lower level") {
  PrimePower pk = PrimePower::make(3, 2);
  GroupPtr g = congruence_kernel(MatrixFamily::SL, 2, pk, 1);
  for (const Enc& e : g->elems) {
    MatZpk m = decode_mat(e, pk, 2);
    CHECK(reduce_level(m, 1) == MatZpk::identity(PrimePower::make(3, 1), 2));
    CHECK(det_mod_pk(m) == 1);
  }
}

TEST_CASE("frattini subgroup of an abelian p-group is the p-th powers") {
  GroupPtr g = abelian_group(9, 2);
  GroupPtr phi = frattini(g);
  CHECK(phi->size() == 9);  // (3 Z/9)^2
  for (const Enc& e : phi->elems) {
    CHECK(e[0] % 3 == 0);
    CHECK(e[1] % 3 == 0);
  }
  CHECK_THROWS_AS(frattini(abelian_group(6, 1)), std::invalid_argument);
}

TEST_CASE("lower p-series of a cyclic 27-group") {
  SeriesData s = lower_p_series(abelian_group(27, 1));
  REQUIRE(s.terms.size() == 4);
  CHECK(s.terms[0]->size() == 27);
  CHECK(s.terms[1]->size() == 9);
  CHECK(s.terms[2]->size() == 3);
  CHECK(s.terms[3]->size() == 1);
  for (const auto& q : s.quotient_orders) CHECK(q == 3);
}

TEST_CASE("quotient groups with canonical representatives") {
  GroupPtr g = abelian_group(9, 1);
  GroupPtr n = subgroup(g, {g->index_of({0}), g->index_of({3}), g->index_of({6})});
  QuotientResult q = quotient(g, n);
  CHECK(q.group->size() == 3);
  CHECK(q.projection.is_homomorphism());
  // projection is surjective with fibers of size |N|
  std::vector<int> fiber(3, 0);
  for (int i = 0; i < 9; ++i) ++fiber[q.projection.apply(i)];
  for (int f : fiber) CHECK(f == 3);
}

TEST_CASE("normality and subgroup predicates") {
  PrimePower pk = PrimePower::make(3, 3);
  GroupPtr g = congruence_kernel(MatrixFamily::SL, 2, pk, 1);
  GroupPtr k2 = congruence_kernel(MatrixFamily::SL, 2, pk, 2);
  CHECK(is_subgroup_of(*k2, *g));
  CHECK(is_normal_in(*k2, *g));
  CHECK_FALSE(same_elements(*k2, *g));
}

TEST_CASE("fixed points of an index permutation form a subgroup") {
  GroupPtr g = abelian_group(5, 2);
  // swap coordinates
  std::vector<int> perm(g->size());
  for (size_t i = 0; i < g->size(); ++i)
    perm[i] = g->index_of({g->elems[i][1], g->elems[i][0]});
  GroupPtr fixed = fixed_by(g, perm);
  CHECK(fixed->size() == 5);  // diagonal
  for (const Enc& e : fixed->elems) CHECK(e[0] == e[1]);
}

TEST_CASE("linear actions reduce entries into canonical range") {
  auto act = linear_action(7, {{-1, 0}, {0, -1}});
  CHECK((act({2, 5}) == Enc{5, 2}));
}
