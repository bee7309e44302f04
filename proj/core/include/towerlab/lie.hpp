#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerlab/rational.hpp"

namespace towerlab {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;

RatMat rat_identity(int n);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatVec rat_apply(const RatMat& a, const RatVec& x);
int rat_rank(RatMat m);
/// Basis of { x : M x = 0 }.
std::vector<RatVec> rat_kernel(const RatMat& m);
/// Solves span(basis) ∋ v, returning coordinates; nullopt if v outside.
std::optional<RatVec> rat_in_span(const std::vector<RatVec>& basis, const RatVec& v);

/// Structure-constant Lie algebra over exact rationals. Antisymmetry and
/// the Jacobi identity are checked on construction.
class LieAlgebraSC {
public:
  int dim() const { return dim_; }
  const RatVec& bracket(int i, int j) const { return table_[i * dim_ + j]; }
  RatVec bracket_vec(const RatVec& x, const RatVec& y) const;

  /// ad(x) as a matrix acting on coordinates.
  RatMat ad(const RatVec& x) const;

  const std::optional<std::vector<RatMat>>& matrix_basis() const {
    return matrix_basis_;
  }

  static LieAlgebraSC from_table(int dim, std::vector<RatVec> table);
  /// Derives structure constants from a linearly independent matrix basis
  /// closed under the commutator.
  static LieAlgebraSC from_matrix_basis(std::vector<RatMat> basis);

private:
  int dim_ = 0;
  std::vector<RatVec> table_;  // [x_i, x_j] coefficients, row-major
  std::optional<std::vector<RatMat>> matrix_basis_;
  void validate() const;
};

/// Built-in algebras: sl2 (basis e,h,f), sl3, sl4, so3, so4, so5, sp4,
/// su2 (compact form of sl2, = so3 structure constants).
LieAlgebraSC builtin_algebra(const std::string& name);

/// Finite-order algebra automorphism, validated against the bracket.
struct AlgebraAuto {
  RatMat matrix;
  int order = 1;
};

AlgebraAuto make_algebra_auto(const LieAlgebraSC& g, RatMat sigma, int order);

/// Conjugation X -> D X D^-1 on an algebra built from a matrix basis.
AlgebraAuto auto_from_conjugation(const LieAlgebraSC& g, const RatMat& d, int order);

/// Symmetric bilinear form, optionally restricted to a subspace basis.
struct QuadForm {
  RatMat gram;
  std::vector<RatVec> basis;  // ambient coordinates of the restricted basis
};

/// Killing form B(x, y) = tr(ad x . ad y) on the full algebra.
QuadForm killing_form(const LieAlgebraSC& g);

Rational eval_form(const QuadForm& q, const RatVec& x, const RatVec& y);

/// Restriction of a form on the full algebra to a subspace.
QuadForm restrict_form(const QuadForm& q, const std::vector<RatVec>& basis);

/// Fixed subalgebra ker(sigma - 1); checked closed under the bracket.
std::vector<RatVec> fixed_subalgebra(const LieAlgebraSC& g, const AlgebraAuto& s);

struct CenterDerivedSplit {
  std::vector<RatVec> center;
  std::vector<RatVec> derived;
};

/// Decomposes a reductive subalgebra as center (+) derived part; verifies
/// the split spans and that the parts are B-orthogonal.
CenterDerivedSplit derived_center_split(const LieAlgebraSC& g,
                                       const std::vector<RatVec>& subalgebra,
                                       const QuadForm& killing);

struct SignatureResult {
  int n_plus = 0, n_minus = 0, n_zero = 0;
  int signature() const { return n_plus - n_minus; }
};

/// Exact signature by rational congruence diagonalization; no floats.
SignatureResult signature(const QuadForm& q);

/// q from 2q = dim + sign; throws on parity violation.
int q_from_dim_sign(int dim_gprime, int sign);

struct EulerSign {
  bool zero = false;  // odd q: chi vanishes
  int sign = 1;       // (-1)^{q/2} otherwise
};

EulerSign euler_sign(int q);

struct RohlfsSum {
  Rational lefschetz;
  bool coherent = true;  // delta * chi >= 0 for every class
};

/// L(tau, Gamma) = sum of twisted Euler characteristics, with the sign
/// coherence check of the Rohlfs-Speh lemma.
RohlfsSum rohlfs_sum(const std::vector<Rational>& class_chis, int delta);

bool mod8_signature_check(int sign_a, int sign_b);

}  // namespace towerlab
