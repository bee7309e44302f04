#pragma once

// Test-only oracles, deliberately independent of the library's Smith normal
// form route: plain long-long matrix arithmetic, a Hermite-style integer
// kernel, and brute-force enumeration of finite subquotients. Used to
// cross-check h1_lattice and ker_mod_im.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;
using Vec = std::vector<long long>;

inline Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat r(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Vec mat_apply(const Mat& a, const Vec& x) {
  int n = static_cast<int>(a.size());
  Vec r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += a[i][j] * x[j];
  return r;
}

/// Smallest k in [1, max_order] with a^k = I, or -1 if there is none.
inline int matrix_order(const Mat& a, int max_order) {
  Mat p = a;
  Mat id = identity(static_cast<int>(a.size()));
  for (int k = 1; k <= max_order; ++k) {
    if (p == id) return k;
    p = mul(p, a);
  }
  return -1;
}

/// Z-basis of { x : n x = 0 } by integer column elimination (Hermite-style
/// gcd steps on a tracked unimodular transform).
inline std::vector<Vec> integer_kernel(const Mat& n) {
  int d = static_cast<int>(n.size());
  Mat w = n;           // d x d, columns will be eliminated
  Mat v = identity(d); // column transform: w_current = n * v
  int col = 0;
  for (int row = 0; row < d && col < d; ++row) {
    // euclidean elimination across columns col..d-1 on this row
    while (true) {
      int nz = -1;
      for (int j = col; j < d; ++j)
        if (w[row][j] != 0 && (nz < 0 || std::llabs(w[row][j]) < std::llabs(w[row][nz])))
          nz = j;
      if (nz < 0) break;
      // swap the smallest entry into the pivot column
      for (int i = 0; i < d; ++i) std::swap(w[i][col], w[i][nz]);
      for (int i = 0; i < d; ++i) std::swap(v[i][col], v[i][nz]);
      bool cleared = true;
      for (int j = col + 1; j < d; ++j) {
        if (w[row][j] == 0) continue;
        long long q = w[row][j] / w[row][col];
        for (int i = 0; i < d; ++i) w[i][j] -= q * w[i][col];
        for (int i = 0; i < d; ++i) v[i][j] -= q * v[i][col];
        if (w[row][j] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (w[row][col] != 0) ++col;
  }
  std::vector<Vec> kernel;
  for (int j = col; j < d; ++j) {
    bool zero = true;
    for (int i = 0; i < d; ++i)
      if (w[i][j] != 0) zero = false;
    if (!zero) continue;
    Vec b(d);
    for (int i = 0; i < d; ++i) b[i] = v[i][j];
    kernel.push_back(std::move(b));
  }
  return kernel;
}

namespace detail {

inline Vec reduce(Vec x, long long mod) {
  for (long long& c : x) c = ((c % mod) + mod) % mod;
  return x;
}

inline Vec add_mod(const Vec& a, const Vec& b, long long mod) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % mod;
  return r;
}

}  // namespace detail

/// Invariant factors (> 1, increasing divisibility) of H^1(Theta, Z^d) for a
/// cyclic Theta acting through a finite-order matrix. Route: the coefficient
/// sequence 0 -> Z^d -M-> Z^d -> (Z/M)^d -> 0 with M = |Theta| identifies
/// H^1(Theta, Z^d) with Fix(A mod M) / (Fix_Z(A) mod M), a finite group we
/// enumerate outright.
inline std::vector<long long> h1_invariant_factors(const Mat& a, int order) {
  int d = static_cast<int>(a.size());
  long long mod = order;
  if (matrix_order(a, order) < 0 || mod < 1)
    throw std::invalid_argument("oracle: action has no such finite order");
  if (mod == 1) return {};

  // all fixed vectors of the reduced action
  std::set<Vec> fix;
  Vec x(d, 0);
  while (true) {
    if (detail::reduce(mat_apply(a, x), mod) == x) fix.insert(x);
    int i = 0;
    while (i < d && ++x[i] == mod) x[i++] = 0;
    if (i == d) break;
  }

  // subgroup generated by the reduced integer fixed lattice
  std::set<Vec> sub;
  sub.insert(Vec(d, 0));
  {
    std::vector<Vec> gens;
    for (const Vec& b : integer_kernel([&] {
           Mat m = a;
           for (int i = 0; i < d; ++i) m[i][i] -= 1;
           return m;
         }()))
      gens.push_back(detail::reduce(b, mod));
    std::vector<Vec> frontier(sub.begin(), sub.end());
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const Vec& e : frontier)
        for (const Vec& g : gens) {
          Vec s = detail::add_mod(e, g, mod);
          if (sub.insert(s).second) next.push_back(s);
        }
      frontier = std::move(next);
    }
  }

  // transversal of the quotient: minimal representative per coset
  std::set<Vec> reps;
  for (const Vec& f : fix) {
    Vec best = f;
    for (const Vec& s : sub) best = std::min(best, detail::add_mod(f, s, mod));
    reps.insert(best);
  }

  // torsion counts t_k = #{x in Q : k x = 0} determine the p-profiles
  auto count_killed = [&](long long k) {
    size_t c = 0;
    for (const Vec& r : reps) {
      Vec kr(d, 0);
      for (int i = 0; i < d; ++i) kr[i] = (r[i] * k) % mod;
      if (sub.count(kr)) ++c;
    }
    return c;
  };

  std::map<long long, std::vector<int>> prime_exponents;  // p -> exps, desc
  long long m = mod;
  for (long long p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    size_t prev = 1;
    long long pj = p;
    std::vector<size_t> ranks;  // #factors divisible by p^j
    while (true) {
      size_t t = count_killed(pj);
      if (t == prev) break;
      size_t rank = 0;
      size_t ratio = t / prev;
      while (ratio > 1) { ratio /= p; ++rank; }
      ranks.push_back(rank);
      prev = t;
      pj *= p;
    }
    std::vector<int> exps;
    for (size_t j = 0; j < ranks.size(); ++j) {
      // ranks[j] factors have exponent > j; the drop gives exact counts
      size_t next = j + 1 < ranks.size() ? ranks[j + 1] : 0;
      for (size_t c = next; c < ranks[j]; ++c) exps.push_back(static_cast<int>(j) + 1);
    }
    std::sort(exps.rbegin(), exps.rend());
    if (!exps.empty()) prime_exponents[p] = exps;
  }

  // invariant factors: align the largest exponents of every prime
  size_t nfac = 0;
  for (const auto& [p, exps] : prime_exponents) nfac = std::max(nfac, exps.size());
  std::vector<long long> divisors(nfac, 1);
  for (const auto& [p, exps] : prime_exponents)
    for (size_t i = 0; i < exps.size(); ++i) {
      long long pe = 1;
      for (int e = 0; e < exps[i]; ++e) pe *= p;
      divisors[i] *= pe;  // index 0 is the largest factor
    }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

/// Deterministic corpus of finite-order integer actions with entries in
/// [-2, 2] and order <= 6: dimensions 1..3, at least `target` cases total.
inline std::vector<std::pair<Mat, int>> finite_order_corpus(size_t target) {
  std::vector<std::pair<Mat, int>> out;
  out.push_back({Mat{{1}}, 1});
  out.push_back({Mat{{-1}}, 2});

  std::vector<std::pair<Mat, int>> d2, d3;
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= 2; ++b)
      for (long long c = -2; c <= 2; ++c)
        for (long long d = -2; d <= 2; ++d) {
          Mat m = {{a, b}, {c, d}};
          int k = matrix_order(m, 6);
          if (k >= 1) d2.push_back({m, k});
        }

  // 3x3: scan determinant-(+-1) candidates for finite order
  Vec entries = {-2, -1, 0, 1, 2};
  Vec idx(9, 0);
  while (true) {
    Mat m = {{entries[idx[0]], entries[idx[1]], entries[idx[2]]},
             {entries[idx[3]], entries[idx[4]], entries[idx[5]]},
             {entries[idx[6]], entries[idx[7]], entries[idx[8]]}};
    long long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det == 1 || det == -1) {
      int k = matrix_order(m, 6);
      if (k >= 1) d3.push_back({m, k});
    }
    size_t i = 0;
    while (i < 9 && ++idx[i] == 5) idx[i++] = 0;
    if (i == 9) break;
  }

  size_t half = (target - out.size() + 1) / 2;
  size_t stride2 = std::max<size_t>(1, d2.size() / half);
  for (size_t i = 0; i < d2.size() && out.size() < 2 + half; i += stride2)
    out.push_back(d2[i]);
  size_t stride3 = std::max<size_t>(1, d3.size() / (target - out.size()));
  for (size_t i = 0; i < d3.size() && out.size() < target; i += stride3)
    out.push_back(d3[i]);
  return out;
}

}  // namespace oracle
