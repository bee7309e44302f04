#pragma once

#include <cstdint>
#include <vector>

#include "towerlab/rational.hpp"

namespace towerlab {

/// A checked prime power p^k with p prime and k >= 1.
struct PrimePower {
  int64_t p = 0;
  int k = 0;
  int64_t modulus = 0;  // p^k

  static PrimePower make(int64_t p, int k);
  bool operator==(const PrimePower&) const = default;
};

bool is_prime(int64_t n);
int64_t pow_i64(int64_t base, int exp);

/// Square matrix over Z/p^k, entries in canonical range [0, p^k).
struct MatZpk {
  PrimePower mod;
  int n = 0;
  std::vector<int64_t> a;  // row-major, size n*n

  MatZpk() = default;
  MatZpk(PrimePower m, int dim);
  static MatZpk identity(PrimePower m, int dim);
  static MatZpk from_rows(PrimePower m, const std::vector<std::vector<int64_t>>& rows);

  int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool operator==(const MatZpk&) const = default;
};

MatZpk mat_mul(const MatZpk& x, const MatZpk& y);
MatZpk mat_add(const MatZpk& x, const MatZpk& y);

/// Two-sided inverse mod p^k. Throws if det is not a unit mod p.
MatZpk invert_mod_pk(const MatZpk& x);

int64_t det_mod_pk(const MatZpk& x);
MatZpk transpose(const MatZpk& x);

/// Entrywise reduction to a lower level k2 <= k (a ring homomorphism).
MatZpk reduce_level(const MatZpk& x, int k2);

/// Exact integer matrix, arbitrary precision.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<cpp_int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<std::vector<long long>>& rows);

  cpp_int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const cpp_int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const IntMat&) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);
IntMat add(const IntMat& x, const IntMat& y);
IntMat sub(const IntMat& x, const IntMat& y);
IntMat scale(const IntMat& x, const cpp_int& c);
IntMat pow(const IntMat& x, int e);
bool is_zero(const IntMat& x);
cpp_int det(const IntMat& x);  // Bareiss, exact

/// U * A * V = diag(d_1, ..., d_r) with d_i | d_{i+1}, d_i >= 0,
/// U and V unimodular. vinv is the inverse of V.
struct SnfResult {
  std::vector<cpp_int> divisors;  // length min(rows, cols)
  IntMat u, v, vinv;
  int rank = 0;  // number of nonzero divisors
};

SnfResult smith_normal_form(const IntMat& m);

/// Finitely generated abelian group: (+)_i Z/d_i  (+)  Z^free_rank,
/// torsion divisors in increasing divisibility order, all > 1.
struct AbelianStructure {
  std::vector<cpp_int> torsion;
  int free_rank = 0;

  bool finite() const { return free_rank == 0; }
  cpp_int order() const;  // throws if infinite
  bool trivial() const { return torsion.empty() && free_rank == 0; }
  std::string str() const;
  bool operator==(const AbelianStructure&) const = default;
};

/// Structure of ker(N) / im(B), where N acts on Z^d (kernel inside Z^d)
/// and the columns of B span a sublattice of ker(N) (checked: N*B = 0).
AbelianStructure ker_mod_im(const IntMat& n, const IntMat& b);

/// Saturated basis of { x in Z^d : N x = 0 }, as columns.
IntMat kernel_lattice(const IntMat& n);

/// Z^rows / (column lattice of m).
AbelianStructure cokernel_structure(const IntMat& m);

}  // namespace towerlab
