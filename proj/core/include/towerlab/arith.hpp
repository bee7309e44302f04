#pragma once

#include <string>
#include <vector>

#include "towerlab/rational.hpp"

namespace towerlab {

/// Number field as a data record; no field arithmetic is implemented.
struct NumberFieldData {
  int degree = 1;       // [F:Q] = s + 2t (checked)
  int real_places = 1;  // s
  int complex_places = 0;  // t
  std::vector<int64_t> roots_of_unity;  // primes l with all l-th roots present

  static NumberFieldData make(int s, int t, std::vector<int64_t> mu = {2});
  bool contains_mu(int64_t ell) const;
};

/// Built-in table entry for a split classical group.
struct SplitGroupData {
  std::string family;  // "SL", "Sp", "SO"
  int n = 2;           // SL_n, Sp_n (n even), SO_n
  int rank = 1;
  int dim = 3;
  int dim_compact = 1;  // dim of the maximal compact of the split real form
  bool has_ds = false;  // discrete series (complex ranks of G and K agree)

  /// q = 1/2 dim(G_inf / K_inf) for the split real form over Q.
  Rational q() const { return Rational(cpp_int(dim - dim_compact), 2); }
};

SplitGroupData builtin_group(const std::string& family, int n);

/// |ker(SL_n(Z) -> SL_n(Z/p^k))| index, i.e. |SL_n(Z/p^k)| =
/// p^{(n^2-1)(k-1)} p^{n(n-1)/2} prod_{i=2}^n (p^i - 1). Exact.
cpp_int congruence_index(const std::string& family, int n, int64_t p, int k);

/// d * alpha with d = (dim_fixed - lambda) / dim_G.
Rational theorem1_exponent(int dim_fixed, int lambda, int dim_g,
                           const Rational& alpha);

struct BasechangeResult {
  Rational exponent;  // 1 / 2^m
  Rational start_degree;  // q of the base group
};

/// Base-change lifting over an extension of degree 2^m; the group must have
/// discrete series.
BasechangeResult basechange_exponent(int m, const SplitGroupData& g);

struct Sl2nReport {
  Rational exponent;      // n(2n+1) / (2^m (4n^2 - 1))
  cpp_int start_degree;   // [F:Q] (n^2 + n)/2
  cpp_int vcd;            // 2^{m+1}[F:Q] n^2 + (s-2) n - (s+t-1), places of E
};

Sl2nReport sl2n_example_report(int n, int m, const NumberFieldData& f,
                               const NumberFieldData& e);

struct SplitGroupsResult {
  Rational alpha;       // r([F:Q]-|S|+1) / (dim(G)[F:Q])
  int64_t start_degree; // r(|S|-1)
  int64_t lambda;       // r(|S|-1), Dirichlet S-unit rank
};

SplitGroupsResult split_groups_exponent(const SplitGroupData& g,
                                        const NumberFieldData& f, int s_size,
                                        int64_t ell);

int64_t dirichlet_unit_rank(int64_t torus_rank, int s_size);

/// Level increment of the congruence filtration per Frattini step:
/// Phi(K(k)) = K(k + e) with e the ramification index.
int frattini_step(int e);

}  // namespace towerlab
