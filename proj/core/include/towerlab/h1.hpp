#pragma once

#include <optional>
#include <vector>

#include "towerlab/group.hpp"
#include "towerlab/modpk.hpp"

namespace towerlab {

/// Cyclic group Theta = <s> of order m acting on a finite group through an
/// automorphism, stored as an index permutation of the target's elements.
struct ThetaAction {
  int order = 1;
  GroupPtr target;
  std::vector<int> perm;  // action of the generator s

  int apply(int i) const { return perm[i]; }
  int apply_power(int i, int e) const {
    for (int t = 0; t < e; ++t) i = perm[i];
    return i;
  }
};

/// Validates sigma^m = id and the automorphism law, then wraps the action.
ThetaAction make_theta_action(const GroupPtr& target, int order,
                              const std::function<Enc(const Enc&)>& sigma);

ThetaAction trivial_theta_action(const GroupPtr& target, int order);

/// Restriction of an action to a stable subgroup (checked).
ThetaAction restrict_action(const ThetaAction& act, const GroupPtr& sub);

/// A 1-cocycle of a cyclic Theta is determined by the value at the
/// generator; full maps are recovered via a_{s^i} = a_s s(a_s) ... .
struct Cocycle {
  int generator_value;  // index in the target group
};

/// All cocycles: elements g with g s(g) s^2(g) ... s^{m-1}(g) = 1,
/// ascending by element index.
std::vector<Cocycle> enumerate_cocycles(const ThetaAction& act);

/// Value of the cocycle at s^e (e >= 0).
int cocycle_value(const ThetaAction& act, const Cocycle& c, int e);

bool is_cocycle(const ThetaAction& act, const Cocycle& c);

struct H1Classes {
  std::vector<Cocycle> reps;      // lexicographically least per class, trivial first
  std::vector<size_t> class_sizes;
  size_t cocycle_count = 0;
};

/// Pointed set H^1(Theta, G): cocycle orbits under a_s -> h^-1 a_s s(h).
H1Classes h1_finite(const ThetaAction& act);

/// Subgroup fixed by the c-twisted action x -> c_s s(x) c_s^-1.
GroupPtr twisted_fixed_subgroup(const ThetaAction& act, const Cocycle& c);

/// Classes of H^1(Theta, inner) that die in H^1(Theta, outer), for a stable
/// subgroup chain inner <= outer.
std::vector<Cocycle> restriction_kernel(const ThetaAction& outer,
                                        const GroupPtr& inner);

/// Lattice action of a cyclic Theta on Z^d via a matrix of finite order.
struct LatticeAction {
  int dim = 0;
  int order = 1;
  IntMat matrix;
};

LatticeAction make_lattice_action(const IntMat& a, int order);

/// H^1(Theta, Z^d) = ker(N) / im(A - I), N = sum of powers of A. Exact, by
/// Smith normal form.
AbelianStructure h1_lattice(const LatticeAction& act);

/// Kernel size of H^1(Theta, q Z^d) -> H^1(Theta, Z^d) for the scaled
/// sublattice; equals the q-torsion of the H^1 group.
cpp_int lattice_restriction_kernel_size(const LatticeAction& act, const cpp_int& q);

/// Finite-level verification data for the pointed exact sequence
/// 0 -> Gamma_n^T -> Gamma_1^T -> (U/P_n)^T -> ker(h_n) -> 0
/// on the abelian tower Gamma_n = p^{n-1} Z^d.
struct CountingReport {
  cpp_int ker_hn;            // |ker h_n|
  cpp_int fixed_index;       // [Gamma_1^T : Gamma_n^T]
  cpp_int quotient_fixed;    // |(U/P_n)^T|
  cpp_int image_in_quotient; // |image of Gamma_1^T in (U/P_n)^T|
  int delta = 0;             // dim_{F_p} of the fixed subspace of U/Phi(U)
  bool sequence_ok = false;  // ker * index == quotient_fixed and fiber counts match
  bool power_ok = false;     // quotient_fixed == p^{(n-1) delta}
};

CountingReport verify_counting_formula(const LatticeAction& act, int64_t p, int n);

/// Finite analogue: |ker h_n| * [G1^T : Gn^T] == |(G1/Gn)^T| by brute force.
struct FiniteCountingReport {
  cpp_int ker_hn, fixed_index, quotient_fixed;
  bool sequence_ok = false;
};

FiniteCountingReport verify_counting_formula_finite(const ThetaAction& outer,
                                                    const GroupPtr& inner);

}  // namespace towerlab
