#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerlab/betti.hpp"
#include "towerlab/h1.hpp"

namespace towerlab {

/// Fully computable abelian tower scenario: Gamma_n = p^{n-1} Z^d with a
/// finite-order matrix action of a cyclic ell-group Theta. Carrier of the
/// Adem / Smith-Floyd verification.
struct Scenario {
  std::string name;
  LatticeAction action;
  int64_t p = 3;          // tower prime
  int64_t ell = 2;        // coefficient prime, = prime of |Theta|
  int depth = 3;
  GroupDescriptor gamma_desc;  // descriptor of Gamma_n (free_abelian(d))
  GroupDescriptor fixed_desc;  // descriptor of every twisted fixed group
  int lambda = 0;              // rank lost to the fixed tower, for exponents
};

/// Builds a scenario and validates the cofinal tower conditions:
/// ell != p, |Theta| a power of ell, elementary abelian successive steps.
Scenario make_scenario(std::string name, const LatticeAction& act, int64_t p,
                       int64_t ell, int depth);

/// Rejects towers with a non-elementary-abelian step. Scales are the
/// sublattice scales c_1 | c_2 | ... (Gamma_n = c_n Z^d).
bool valid_cofinal_scales(const std::vector<cpp_int>& scales, int64_t p);

/// Right-hand side of the Adem decomposition at level n, degree r:
/// sum over classes of H^1(Theta, Gamma_n) of the fixed-group tail sums.
cpp_int adem_rhs(const Scenario& s, int level, int64_t r);

struct SmithFloydResult {
  cpp_int lhs, rhs;
  bool holds = false;
};

/// tail_sum(Gamma_n) >= adem_rhs, both sides reported.
SmithFloydResult smith_floyd_check(const Scenario& s, int level, int64_t r);

/// Full chain: tail(Gamma_n) >= adem_rhs >= |ker h_n| * tail(Gamma_n^Theta).
struct ChainResult {
  cpp_int tail_gamma, adem, kernel_bound;
  bool holds = false;
};

ChainResult chain_inequality(const Scenario& s, int level, int64_t r);

struct GrowthReport {
  std::vector<cpp_int> indices;    // [Gamma_1 : Gamma_n]
  std::vector<cpp_int> values;     // adem_rhs per level
  double fitted_exponent = 0.0;
  double residual = 0.0;
  bool degenerate = false;         // all values equal or too few points
  Rational predicted;              // d * alpha from scenario metadata
};

/// Least-squares fit of log(value) against log(index) across levels
/// 1..depth, compared with the predicted exponent
/// (dim fixed - lambda) / dim * alpha (alpha = 1 here).
GrowthReport growth_fit(const Scenario& s, int64_t r);

}  // namespace towerlab
