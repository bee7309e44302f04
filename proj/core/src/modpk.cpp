#include "towerlab/modpk.hpp"

#include <algorithm>
#include <stdexcept>

namespace towerlab {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int64_t pow_i64(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > INT64_MAX / base)
      throw std::overflow_error("pow_i64: overflow");
    r *= base;
  }
  return r;
}

PrimePower PrimePower::make(int64_t p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("PrimePower: p is not prime");
  if (k < 1) throw std::invalid_argument("PrimePower: exponent must be >= 1");
  PrimePower pp;
  pp.p = p;
  pp.k = k;
  pp.modulus = pow_i64(p, k);
  if (pp.modulus > (int64_t(1) << 31))
    throw std::invalid_argument("PrimePower: p^k too large for exact int64 products");
  return pp;
}

MatZpk::MatZpk(PrimePower m, int dim)
    : mod(m), n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

MatZpk MatZpk::identity(PrimePower m, int dim) {
  MatZpk x(m, dim);
  for (int i = 0; i < dim; ++i) x.at(i, i) = 1;
  return x;
}

MatZpk MatZpk::from_rows(PrimePower m, const std::vector<std::vector<int64_t>>& rows) {
  int dim = static_cast<int>(rows.size());
  MatZpk x(m, dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim)
      throw std::invalid_argument("MatZpk: not square");
    for (int j = 0; j < dim; ++j) {
      int64_t v = rows[i][j] % m.modulus;
      if (v < 0) v += m.modulus;
      x.at(i, j) = v;
    }
  }
  return x;
}

static void require_compatible(const MatZpk& x, const MatZpk& y) {
  if (!(x.mod == y.mod) || x.n != y.n)
    throw std::invalid_argument("MatZpk: modulus/dimension mismatch");
}

MatZpk mat_mul(const MatZpk& x, const MatZpk& y) {
  require_compatible(x, y);
  MatZpk r(x.mod, x.n);
  const int64_t m = x.mod.modulus;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      int64_t s = 0;
      for (int t = 0; t < x.n; ++t)
        s = (s + x.at(i, t) * y.at(t, j)) % m;
      r.at(i, j) = s;
    }
  return r;
}

MatZpk mat_add(const MatZpk& x, const MatZpk& y) {
  require_compatible(x, y);
  MatZpk r(x.mod, x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = (x.a[i] + y.a[i]) % x.mod.modulus;
  return r;
}

MatZpk transpose(const MatZpk& x) {
  MatZpk r(x.mod, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

// Extended Euclid inverse of a mod m, for gcd(a, m) = 1.
static int64_t inv_mod(int64_t a, int64_t m) {
  int64_t r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    std::swap(r0 -= q * r1, r1);
    std::swap(s0 -= q * s1, s1);
  }
  if (r0 != 1) throw std::invalid_argument("inv_mod: not a unit");
  return ((s0 % m) + m) % m;
}

MatZpk invert_mod_pk(const MatZpk& x) {
  // Gauss-Jordan directly mod p^k; pivots must be units (det a unit mod p).
  const int64_t m = x.mod.modulus;
  const int n = x.n;
  MatZpk w = x;
  MatZpk inv = MatZpk::identity(x.mod, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (w.at(i, col) % x.mod.p != 0) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("invert_mod_pk: determinant not a unit");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    int64_t pinv = inv_mod(w.at(col, col), m);
    for (int j = 0; j < n; ++j) {
      w.at(col, j) = w.at(col, j) * pinv % m;
      inv.at(col, j) = inv.at(col, j) * pinv % m;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      int64_t f = w.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        w.at(i, j) = ((w.at(i, j) - f * w.at(col, j)) % m + m) % m;
        inv.at(i, j) = ((inv.at(i, j) - f * inv.at(col, j)) % m + m) % m;
      }
    }
  }
  return inv;
}

int64_t det_mod_pk(const MatZpk& x) {
  // Lift to exact integers and reduce; dimensions are desk-scale.
  IntMat w(x.n, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) w.at(i, j) = x.at(i, j);
  cpp_int d = det(w) % x.mod.modulus;
  if (d < 0) d += x.mod.modulus;
  return static_cast<int64_t>(d);
}

MatZpk reduce_level(const MatZpk& x, int k2) {
  if (k2 > x.mod.k) throw std::invalid_argument("reduce_level: target level above source");
  PrimePower m2 = PrimePower::make(x.mod.p, k2);
  MatZpk r(m2, x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] % m2.modulus;
  return r;
}

IntMat IntMat::identity(int n) {
  IntMat x(n, n);
  for (int i = 0; i < n; ++i) x.at(i, i) = 1;
  return x;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMat x(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("IntMat: ragged rows");
    for (int j = 0; j < c; ++j) x.at(i, j) = rows[i][j];
  }
  return x;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("IntMat mul: shape mismatch");
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int t = 0; t < x.cols; ++t) {
      const cpp_int& xv = x.at(i, t);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(t, j);
    }
  return r;
}

IntMat add(const IntMat& x, const IntMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("IntMat add: shape mismatch");
  IntMat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

IntMat sub(const IntMat& x, const IntMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("IntMat sub: shape mismatch");
  IntMat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

IntMat scale(const IntMat& x, const cpp_int& c) {
  IntMat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] * c;
  return r;
}

IntMat pow(const IntMat& x, int e) {
  if (x.rows != x.cols) throw std::invalid_argument("IntMat pow: not square");
  IntMat r = IntMat::identity(x.rows);
  for (int i = 0; i < e; ++i) r = mul(r, x);
  return r;
}

bool is_zero(const IntMat& x) {
  return std::all_of(x.a.begin(), x.a.end(), [](const cpp_int& v) { return v == 0; });
}

cpp_int det(const IntMat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("det: not square");
  int n = x.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat w = x;
  cpp_int prev = 1;
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (w.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      sign = -sign;
    }
    for (int i = col + 1; i < n; ++i)
      for (int j = col + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(col, col) - w.at(i, col) * w.at(col, j)) / prev;
    prev = w.at(col, col);
  }
  return sign * w.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
  IntMat a, u, v, vinv;

  void swap_rows(int i, int j) {
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row_i += q * row_j
  void add_row(int i, int j, const cpp_int& q) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) += q * a.at(j, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) += q * u.at(j, c);
  }
  // col_i += q * col_j
  void add_col(int i, int j, const cpp_int& q) {
    for (int r = 0; r < a.rows; ++r) a.at(r, i) += q * a.at(r, j);
    for (int r = 0; r < v.rows; ++r) v.at(r, i) += q * v.at(r, j);
    // inverse op on vinv: row_j -= q * row_i
    for (int c = 0; c < vinv.cols; ++c) vinv.at(j, c) -= q * vinv.at(i, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

cpp_int abs_ci(const cpp_int& v) { return v < 0 ? cpp_int(-v) : v; }

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
  SnfWork w{m, IntMat::identity(m.rows), IntMat::identity(m.cols),
            IntMat::identity(m.cols)};
  const int nmin = std::min(m.rows, m.cols);

  for (int t = 0; t < nmin; ++t) {
    for (;;) {
      // Smallest-absolute-value nonzero pivot, lowest (row, col) tie-break.
      int pi = -1, pj = -1;
      cpp_int best;
      for (int i = t; i < m.rows; ++i)
        for (int j = t; j < m.cols; ++j) {
          const cpp_int& v = w.a.at(i, j);
          if (v == 0) continue;
          cpp_int av = abs_ci(v);
          if (pi < 0 || av < best) { best = av; pi = i; pj = j; }
        }
      if (pi < 0) break;  // submatrix zero, done
      if (pi != t) w.swap_rows(pi, t);
      if (pj != t) w.swap_cols(pj, t);

      bool clean = true;
      for (int i = t + 1; i < m.rows; ++i) {
        const cpp_int& v = w.a.at(i, t);
        if (v == 0) continue;
        cpp_int q = -(v / w.a.at(t, t));
        w.add_row(i, t, q);
        if (w.a.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < m.cols; ++j) {
        const cpp_int& v = w.a.at(t, j);
        if (v == 0) continue;
        cpp_int q = -(v / w.a.at(t, t));
        w.add_col(j, t, q);
        if (w.a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // remainders left, pick a smaller pivot

      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (int i = t + 1; i < m.rows && divisible; ++i)
        for (int j = t + 1; j < m.cols; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }

  SnfResult res;
  res.u = std::move(w.u);
  res.v = std::move(w.v);
  res.vinv = std::move(w.vinv);
  res.divisors.resize(nmin);
  for (int t = 0; t < nmin; ++t) {
    res.divisors[t] = w.a.at(t, t);
    if (res.divisors[t] != 0) ++res.rank;
  }
  return res;
}

cpp_int AbelianStructure::order() const {
  if (free_rank > 0) throw std::domain_error("AbelianStructure: infinite group");
  cpp_int o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianStructure::str() const {
  if (trivial()) return "0";
  std::string s;
  for (const auto& d : torsion) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.str();
  }
  if (free_rank > 0) {
    if (!s.empty()) s += " x ";
    s += "Z^" + std::to_string(free_rank);
  }
  return s;
}

IntMat kernel_lattice(const IntMat& n) {
  SnfResult s = smith_normal_form(n);
  int d = n.cols;
  int nk = d - s.rank;
  IntMat k(d, nk);
  for (int j = 0; j < nk; ++j)
    for (int i = 0; i < d; ++i) k.at(i, j) = s.v.at(i, s.rank + j);
  return k;
}

AbelianStructure cokernel_structure(const IntMat& m) {
  SnfResult s = smith_normal_form(m);
  AbelianStructure g;
  for (const auto& d : s.divisors)
    if (d > 1) g.torsion.push_back(d);
  g.free_rank = m.rows - s.rank;
  return g;
}

AbelianStructure ker_mod_im(const IntMat& n, const IntMat& b) {
  if (n.cols != b.rows) throw std::invalid_argument("ker_mod_im: shape mismatch");
  if (!is_zero(mul(n, b)))
    throw std::invalid_argument("ker_mod_im: im(B) not contained in ker(N)");

  SnfResult s = smith_normal_form(n);
  const int d = n.cols;
  const int nk = d - s.rank;  // kernel rank

  // ker(N) = V * (coordinates r..d), so coordinates of B in the kernel basis
  // are the corresponding rows of V^-1 * B.
  IntMat coords = mul(s.vinv, b);
  IntMat x(nk, b.cols);
  for (int i = 0; i < s.rank; ++i)
    for (int j = 0; j < b.cols; ++j)
      if (coords.at(i, j) != 0)
        throw std::logic_error("ker_mod_im: column of B escapes the kernel lattice");
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < b.cols; ++j) x.at(i, j) = coords.at(s.rank + i, j);

  return cokernel_structure(x);
}

}  // namespace towerlab
