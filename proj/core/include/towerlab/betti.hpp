#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "towerlab/rational.hpp"

namespace towerlab {

/// Symbolic group classes whose mod-l cohomology has a closed form.
struct GroupDescriptor {
  enum class Kind { Trivial, Free, FreeAbelian, FiniteCyclic, Product };

  Kind kind = Kind::Trivial;
  int64_t param = 0;  // rank or order
  std::vector<GroupDescriptor> factors;

  static GroupDescriptor trivial() { return {}; }
  static GroupDescriptor free_group(int64_t rank);
  static GroupDescriptor free_abelian(int64_t rank);
  static GroupDescriptor finite_cyclic(int64_t order);
  static GroupDescriptor product(std::vector<GroupDescriptor> fs);

  bool torsion_free() const;
  std::string str() const;
};

/// Exact mod-l Betti numbers. Infinite-support cases (cyclic with l | m)
/// stay symbolic: per-degree queries are always exact, the coefficient
/// vector is materialized only for finite support.
struct BettiVector {
  int64_t ell = 2;
  bool finite_support = true;
  std::vector<cpp_int> coeffs;  // valid when finite_support
  GroupDescriptor desc;

  cpp_int at(int64_t degree) const;
};

BettiVector betti_mod_l(const GroupDescriptor& g, int64_t ell);

/// Sum of Betti numbers in degrees >= r. Infinite support needs a cap.
cpp_int tail_sum(const BettiVector& v, int64_t r,
                 std::optional<int64_t> degree_cap = std::nullopt);

/// F_l[Z]-module given by the action matrix of the generator.
struct FlModule {
  int64_t ell = 2;
  int dim = 0;
  std::vector<std::vector<int64_t>> action;  // dim x dim, mod ell
};

/// (dim H^0, dim H^1) of Z with coefficients in m:
/// H^0 = ker(t - 1), H^1 = coker(t - 1). Requires the action invertible.
std::pair<int, int> cohomology_of_Z_with_module(const FlModule& m);

int rank_mod_ell(const std::vector<std::vector<int64_t>>& m, int64_t ell);

/// Rational-cohomology Euler characteristic (finite groups count as points).
Rational euler_char(const GroupDescriptor& g);

/// chi of a finite-index subgroup: chi * index.
Rational chi_finite_index(const Rational& chi_base, const cpp_int& index);

}  // namespace towerlab
