#include "doctest.h"

#include "towerlab/lie.hpp"

using namespace towerlab;

TEST_CASE("sl2 structure constants") {
  LieAlgebraSC g = builtin_algebra("sl2");
  REQUIRE(g.dim() == 3);
  RatVec e{1, 0, 0}, h{0, 1, 0}, f{0, 0, 1};
  CHECK(g.bracket_vec(e, f) == h);
  CHECK((g.bracket_vec(h, e) == RatVec{2, 0, 0}));
  CHECK((g.bracket_vec(h, f) == RatVec{0, 0, -2}));
  CHECK((g.bracket_vec(e, e) == RatVec{0, 0, 0}));
}

TEST_CASE("construction rejects tables violating jacobi or antisymmetry") {
  // [x,y] = x on a 2-dim algebra is fine (affine algebra)...
  std::vector<RatVec> ok = {{0, 0}, {1, 0}, {-1, 0}, {0, 0}};
  CHECK_NOTHROW(LieAlgebraSC::from_table(2, ok));
  // ...but a non-antisymmetric table is not
  std::vector<RatVec> bad = {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
  CHECK_THROWS_AS(LieAlgebraSC::from_table(2, bad), std::invalid_argument);
}

TEST_CASE("killing form is ad-invariant") {
  LieAlgebraSC g = builtin_algebra("sl3");
  QuadForm b = killing_form(g);
  // spot-check B([x,y],z) + B(y,[x,z]) = 0 on basis triples
  for (int i = 0; i < g.dim(); i += 3)
    for (int j = 1; j < g.dim(); j += 3)
      for (int k = 2; k < g.dim(); k += 3) {
        RatVec x(g.dim(), Rational(0)), y(g.dim(), Rational(0)),
            z(g.dim(), Rational(0));
        x[i] = 1; y[j] = 1; z[k] = 1;
        Rational lhs = eval_form(b, g.bracket_vec(x, y), z);
        Rational rhs = eval_form(b, y, g.bracket_vec(x, z));
        CHECK(lhs + rhs == Rational(0));
      }
}

TEST_CASE("killing signatures of the built-in algebras") {
  auto sig = [](const std::string& name) {
    SignatureResult s = signature(killing_form(builtin_algebra(name)));
    return std::make_pair(s.n_plus, s.n_minus);
  };
  CHECK(sig("sl2") == std::make_pair(2, 1));
  CHECK(sig("sl3") == std::make_pair(5, 3));
  CHECK(sig("sl4") == std::make_pair(9, 6));
  CHECK(sig("sp4") == std::make_pair(6, 4));
  CHECK(sig("so3") == std::make_pair(0, 3));   // compact: negative definite
  CHECK(sig("so4") == std::make_pair(0, 6));
  CHECK(sig("so5") == std::make_pair(0, 10));
  CHECK(sig("su2") == std::make_pair(0, 3));
}

TEST_CASE("signature handles hyperbolic and degenerate blocks") {
  QuadForm hyp{{{0, 1}, {1, 0}}, {}};
  SignatureResult s = signature(hyp);
  CHECK(s.n_plus == 1);
  CHECK(s.n_minus == 1);
  CHECK(s.n_zero == 0);

  QuadForm zero{{{0, 0}, {0, 0}}, {}};
  SignatureResult z = signature(zero);
  CHECK(z.n_zero == 2);

  QuadForm asym{{{0, 1}, {2, 0}}, {}};
  CHECK_THROWS_AS(signature(asym), std::invalid_argument);
}

TEST_CASE("involution fixed subalgebras and their restricted forms") {
  // sl3 with conjugation by diag(-1,-1,1): fixed part gl2-like, dim 4
  LieAlgebraSC sl3 = builtin_algebra("sl3");
  AlgebraAuto inv = auto_from_conjugation(sl3, {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, 2);
  std::vector<RatVec> fixed = fixed_subalgebra(sl3, inv);
  CHECK(fixed.size() == 4);

  QuadForm b = killing_form(sl3);
  CenterDerivedSplit split = derived_center_split(sl3, fixed, b);
  CHECK(split.center.size() == 1);
  CHECK(split.derived.size() == 3);
  SignatureResult s = signature(restrict_form(b, split.derived));
  CHECK(s.n_plus == 2);
  CHECK(s.n_minus == 1);
  CHECK(q_from_dim_sign(3, s.signature()) == 2);

  // sl4 with diag(-1,-1,1,1): fixed dim 7, derived dim 6
  LieAlgebraSC sl4 = builtin_algebra("sl4");
  AlgebraAuto inv4 = auto_from_conjugation(
      sl4, {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 2);
  std::vector<RatVec> fixed4 = fixed_subalgebra(sl4, inv4);
  CHECK(fixed4.size() == 7);
  CenterDerivedSplit split4 = derived_center_split(sl4, fixed4, killing_form(sl4));
  CHECK(split4.derived.size() == 6);
}

TEST_CASE("automorphism validation") {
  LieAlgebraSC sl2 = builtin_algebra("sl2");
  // swapping e and f while fixing h is not an automorphism ([e,f]=h but
  // [f,e]=-h), so the bracket check must fire
  RatMat bad = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  CHECK_THROWS_AS(make_algebra_auto(sl2, bad, 2), std::invalid_argument);
  // e -> -e, f -> -f, h -> h is one (conjugation by diag(i,-i) over C,
  // realized rationally)
  RatMat good = {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  CHECK_NOTHROW(make_algebra_auto(sl2, good, 2));
  // wrong claimed order
  CHECK_THROWS_AS(make_algebra_auto(sl2, good, 3), std::invalid_argument);
}

TEST_CASE("non-reductive subalgebras are rejected by the split") {
  LieAlgebraSC sl2 = builtin_algebra("sl2");
  QuadForm b = killing_form(sl2);
  // borel span{e, h}: solvable, not reductive
  std::vector<RatVec> borel = {{1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(derived_center_split(sl2, borel, b), std::invalid_argument);
}

TEST_CASE("euler sign bookkeeping") {
  CHECK_THROWS_AS(q_from_dim_sign(3, 2), std::invalid_argument);  // parity
  CHECK(q_from_dim_sign(8, 4) == 6);
  CHECK(euler_sign(0).sign == 1);
  CHECK(euler_sign(2).sign == -1);
  CHECK(euler_sign(4).sign == 1);
  CHECK(euler_sign(1).zero);
  CHECK(euler_sign(3).zero);
  CHECK_THROWS_AS(euler_sign(-1), std::invalid_argument);
}

TEST_CASE("rohlfs sums and coherence") {
  RohlfsSum r = rohlfs_sum({Rational(-2), Rational(-1, 2)}, -1);
  CHECK(r.lefschetz == Rational(-5, 2));
  CHECK(r.coherent);
  RohlfsSum mixed = rohlfs_sum({Rational(-2), Rational(1, 2)}, -1);
  CHECK_FALSE(mixed.coherent);
  // zero terms never break coherence
  CHECK(rohlfs_sum({Rational(0), Rational(3)}, 1).coherent);
  CHECK_THROWS_AS(rohlfs_sum({Rational(1)}, 0), std::invalid_argument);
}

TEST_CASE("signature differences mod 8") {
  CHECK(mod8_signature_check(1, 1));
  CHECK(mod8_signature_check(9, 1));
  CHECK(mod8_signature_check(-7, 1));
  CHECK_FALSE(mod8_signature_check(4, 1));
}
