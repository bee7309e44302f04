#include "towerlab/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace towerlab {

RatMat rat_identity(int n) {
  RatMat m(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int c = k == 0 ? 0 : static_cast<int>(b[0].size());
  RatMat r(n, RatVec(c, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].sign() == 0) continue;
      for (int j = 0; j < c; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

RatVec rat_apply(const RatMat& a, const RatVec& x) {
  int n = static_cast<int>(a.size());
  RatVec r(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (x[j].sign() != 0) r[i] += a[i][j] * x[j];
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c].sign() != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (int j = 0; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].sign() == 0) continue;
      Rational f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rat_rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::vector<RatVec> rat_kernel(const RatMat& m) {
  if (m.empty()) return {};
  int cols = static_cast<int>(m[0].size());
  RatMat w = m;
  std::vector<int> pivots = rref(w);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> kernel;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w[r][free];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::optional<RatVec> rat_in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  if (basis.empty()) {
    for (const Rational& x : v)
      if (x.sign() != 0) return std::nullopt;
    return RatVec{};
  }
  int dim = static_cast<int>(v.size());
  int k = static_cast<int>(basis.size());
  // augmented system [basis | v], columns are basis vectors
  RatMat aug(dim, RatVec(k + 1, Rational(0)));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = basis[j][i];
    aug[i][k] = v[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c == k) return std::nullopt;  // v independent of the basis
  RatVec coords(k, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = aug[r][k];
  return coords;
}

RatVec LieAlgebraSC::bracket_vec(const RatVec& x, const RatVec& y) const {
  RatVec r(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].sign() == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].sign() == 0) continue;
      Rational c = x[i] * y[j];
      const RatVec& b = bracket(i, j);
      for (int t = 0; t < dim_; ++t)
        if (b[t].sign() != 0) r[t] += c * b[t];
    }
  }
  return r;
}

RatMat LieAlgebraSC::ad(const RatVec& x) const {
  RatMat m(dim_, RatVec(dim_, Rational(0)));
  for (int j = 0; j < dim_; ++j) {
    RatVec ej(dim_, Rational(0));
    ej[j] = 1;
    RatVec col = bracket_vec(x, ej);
    for (int i = 0; i < dim_; ++i) m[i][j] = col[i];
  }
  return m;
}

void LieAlgebraSC::validate() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int t = 0; t < dim_; ++t)
        if (bracket(i, j)[t] != -bracket(j, i)[t])
          throw std::invalid_argument("LieAlgebraSC: antisymmetry fails");
  // Jacobi over basis triples
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        RatVec ei(dim_, Rational(0)), ej(dim_, Rational(0)), ek(dim_, Rational(0));
        ei[i] = 1; ej[j] = 1; ek[k] = 1;
        RatVec s = bracket_vec(ei, bracket(j, k));
        RatVec t2 = bracket_vec(ej, bracket(k, i));
        RatVec t3 = bracket_vec(ek, bracket(i, j));
        for (int t = 0; t < dim_; ++t)
          if ((s[t] + t2[t] + t3[t]).sign() != 0)
            throw std::invalid_argument("LieAlgebraSC: Jacobi identity fails");
      }
}

LieAlgebraSC LieAlgebraSC::from_table(int dim, std::vector<RatVec> table) {
  if (static_cast<int>(table.size()) != dim * dim)
    throw std::invalid_argument("LieAlgebraSC: table size mismatch");
  LieAlgebraSC g;
  g.dim_ = dim;
  g.table_ = std::move(table);
  g.validate();
  return g;
}

namespace {

RatMat commutator(const RatMat& a, const RatMat& b) {
  RatMat ab = rat_mul(a, b), ba = rat_mul(b, a);
  for (size_t i = 0; i < ab.size(); ++i)
    for (size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

RatVec flatten(const RatMat& m) {
  RatVec v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

}  // namespace

LieAlgebraSC LieAlgebraSC::from_matrix_basis(std::vector<RatMat> basis) {
  int dim = static_cast<int>(basis.size());
  std::vector<RatVec> flat;
  for (const auto& m : basis) flat.push_back(flatten(m));
  {
    RatMat check(flat.begin(), flat.end());
    if (rat_rank(check) != dim)
      throw std::invalid_argument("from_matrix_basis: basis not independent");
  }
  std::vector<RatVec> table(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      RatVec c = flatten(commutator(basis[i], basis[j]));
      auto coords = rat_in_span(flat, c);
      if (!coords)
        throw std::invalid_argument("from_matrix_basis: not closed under commutator");
      table[i * dim + j] = *coords;
    }
  LieAlgebraSC g;
  g.dim_ = dim;
  g.table_ = std::move(table);
  g.matrix_basis_ = std::move(basis);
  g.validate();
  return g;
}

namespace {

RatMat unit_mat(int n, int i, int j, Rational v) {
  RatMat m(n, RatVec(n, Rational(0)));
  m[i][j] = v;
  return m;
}

std::vector<RatMat> sl_basis(int n) {
  std::vector<RatMat> basis;
  if (n == 2) {
    // basis order e, h, f
    basis.push_back(unit_mat(2, 0, 1, 1));  // e
    RatMat h = unit_mat(2, 0, 0, 1);
    h[1][1] = -1;
    basis.push_back(h);
    basis.push_back(unit_mat(2, 1, 0, 1));  // f
    return basis;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) basis.push_back(unit_mat(n, i, j, 1));
  for (int i = 0; i + 1 < n; ++i) {
    RatMat h = unit_mat(n, i, i, 1);
    h[i + 1][i + 1] = -1;
    basis.push_back(h);
  }
  return basis;
}

std::vector<RatMat> so_basis(int n) {
  std::vector<RatMat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMat m = unit_mat(n, i, j, 1);
      m[j][i] = -1;
      basis.push_back(m);
    }
  return basis;
}

std::vector<RatMat> sp_basis(int h) {
  int n = 2 * h;
  std::vector<RatMat> basis;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      RatMat m = unit_mat(n, i, j, 1);
      m[h + j][h + i] = -1;
      basis.push_back(m);
    }
  for (int i = 0; i < h; ++i)
    for (int j = i; j < h; ++j) {
      RatMat b(n, RatVec(n, Rational(0)));
      b[i][h + j] = 1;
      b[j][h + i] = 1;
      basis.push_back(b);
      RatMat c(n, RatVec(n, Rational(0)));
      c[h + i][j] = 1;
      c[h + j][i] = 1;
      basis.push_back(c);
    }
  return basis;
}

}  // namespace

LieAlgebraSC builtin_algebra(const std::string& name) {
  if (name == "sl2") return LieAlgebraSC::from_matrix_basis(sl_basis(2));
  if (name == "sl3") return LieAlgebraSC::from_matrix_basis(sl_basis(3));
  if (name == "sl4") return LieAlgebraSC::from_matrix_basis(sl_basis(4));
  if (name == "so3" || name == "su2")
    return LieAlgebraSC::from_matrix_basis(so_basis(3));
  if (name == "so4") return LieAlgebraSC::from_matrix_basis(so_basis(4));
  if (name == "so5") return LieAlgebraSC::from_matrix_basis(so_basis(5));
  if (name == "sp4") return LieAlgebraSC::from_matrix_basis(sp_basis(2));
  throw std::invalid_argument("builtin_algebra: unknown algebra " + name);
}

AlgebraAuto make_algebra_auto(const LieAlgebraSC& g, RatMat sigma, int order) {
  if (order < 1) throw std::invalid_argument("algebra auto: order must be >= 1");
  int n = g.dim();
  RatMat power = rat_identity(n);
  for (int e = 0; e < order; ++e) power = rat_mul(power, sigma);
  if (power != rat_identity(n))
    throw std::invalid_argument("algebra auto: sigma^m != id");
  // automorphism law on basis pairs
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVec ei(n, Rational(0)), ej(n, Rational(0));
      ei[i] = 1; ej[j] = 1;
      RatVec lhs = rat_apply(sigma, g.bracket(i, j));
      RatVec rhs = g.bracket_vec(rat_apply(sigma, ei), rat_apply(sigma, ej));
      if (lhs != rhs)
        throw std::invalid_argument("algebra auto: does not preserve the bracket");
    }
  return {std::move(sigma), order};
}

AlgebraAuto auto_from_conjugation(const LieAlgebraSC& g, const RatMat& d, int order) {
  if (!g.matrix_basis())
    throw std::invalid_argument("auto_from_conjugation: algebra has no matrix basis");
  const auto& basis = *g.matrix_basis();
  int n = g.dim();
  std::vector<RatVec> flat;
  for (const auto& m : basis) flat.push_back([&] {
    RatVec v;
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
  }());

  // D X D^-1 on each basis element, re-expressed in the basis
  RatMat dinv;
  {
    int k = static_cast<int>(d.size());
    RatMat aug(k, RatVec(2 * k, Rational(0)));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) aug[i][j] = d[i][j];
      aug[i][k + i] = 1;
    }
    if (static_cast<int>(rref(aug).size()) != k)
      throw std::invalid_argument("auto_from_conjugation: D singular");
    dinv.assign(k, RatVec(k, Rational(0)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) dinv[i][j] = aug[i][k + j];
  }

  RatMat sigma(n, RatVec(n, Rational(0)));
  for (int j = 0; j < n; ++j) {
    RatMat img = rat_mul(rat_mul(d, basis[j]), dinv);
    RatVec v;
    for (const auto& row : img) v.insert(v.end(), row.begin(), row.end());
    auto coords = rat_in_span(flat, v);
    if (!coords)
      throw std::invalid_argument("auto_from_conjugation: image leaves the algebra");
    for (int i = 0; i < n; ++i) sigma[i][j] = (*coords)[i];
  }
  return make_algebra_auto(g, std::move(sigma), order);
}

QuadForm killing_form(const LieAlgebraSC& g) {
  int n = g.dim();
  std::vector<RatMat> ads(n);
  for (int i = 0; i < n; ++i) {
    RatVec ei(n, Rational(0));
    ei[i] = 1;
    ads[i] = g.ad(ei);
  }
  QuadForm q;
  q.gram.assign(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational tr = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tr += ads[i][a][b] * ads[j][b][a];
      q.gram[i][j] = tr;
      q.gram[j][i] = tr;
    }
  for (int i = 0; i < n; ++i) {
    RatVec ei(n, Rational(0));
    ei[i] = 1;
    q.basis.push_back(ei);
  }
  return q;
}

Rational eval_form(const QuadForm& q, const RatVec& x, const RatVec& y) {
  Rational r = 0;
  int n = static_cast<int>(q.gram.size());
  for (int i = 0; i < n; ++i) {
    if (x[i].sign() == 0) continue;
    for (int j = 0; j < n; ++j)
      if (y[j].sign() != 0) r += x[i] * q.gram[i][j] * y[j];
  }
  return r;
}

QuadForm restrict_form(const QuadForm& q, const std::vector<RatVec>& basis) {
  int k = static_cast<int>(basis.size());
  QuadForm r;
  r.basis = basis;
  r.gram.assign(k, RatVec(k, Rational(0)));
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      Rational v = eval_form(q, basis[a], basis[b]);
      r.gram[a][b] = v;
      r.gram[b][a] = v;
    }
  return r;
}

std::vector<RatVec> fixed_subalgebra(const LieAlgebraSC& g, const AlgebraAuto& s) {
  int n = g.dim();
  RatMat m = s.matrix;
  for (int i = 0; i < n; ++i) m[i][i] -= 1;
  std::vector<RatVec> fixed = rat_kernel(m);
  for (size_t a = 0; a < fixed.size(); ++a)
    for (size_t b = a; b < fixed.size(); ++b)
      if (!rat_in_span(fixed, g.bracket_vec(fixed[a], fixed[b])))
        throw std::logic_error("fixed_subalgebra: not closed under bracket");
  return fixed;
}

CenterDerivedSplit derived_center_split(const LieAlgebraSC& g,
                                       const std::vector<RatVec>& subalgebra,
                                       const QuadForm& killing) {
  int k = static_cast<int>(subalgebra.size());
  int n = g.dim();

  // derived part: span of pairwise brackets
  RatMat bracket_rows;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      bracket_rows.push_back(g.bracket_vec(subalgebra[a], subalgebra[b]));
  std::vector<RatVec> derived;
  if (!bracket_rows.empty()) {
    RatMat w = bracket_rows;
    size_t nrows = rref(w).size();
    for (size_t i = 0; i < nrows; ++i) derived.push_back(w[i]);
  }

  // center: x in the subalgebra with [x, h_b] = 0 for all b
  RatMat constraint(static_cast<size_t>(n) * k, RatVec(k, Rational(0)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      RatVec br = g.bracket_vec(subalgebra[a], subalgebra[b]);
      for (int t = 0; t < n; ++t) constraint[b * n + t][a] = br[t];
    }
  std::vector<RatVec> center;
  for (const RatVec& coords : rat_kernel(constraint)) {
    RatVec x(n, Rational(0));
    for (int a = 0; a < k; ++a)
      for (int t = 0; t < n; ++t) x[t] += coords[a] * subalgebra[a][t];
    center.push_back(std::move(x));
  }

  // derived part must be a subalgebra
  for (size_t a = 0; a < derived.size(); ++a)
    for (size_t b = a; b < derived.size(); ++b)
      if (!rat_in_span(derived, g.bracket_vec(derived[a], derived[b])))
        throw std::invalid_argument("derived_center_split: derived part not closed");

  // z (+) g' must span the subalgebra
  RatMat all;
  for (const auto& v : center) all.push_back(v);
  for (const auto& v : derived) all.push_back(v);
  if (rat_rank(all) != k ||
      static_cast<int>(center.size() + derived.size()) != k)
    throw std::invalid_argument("derived_center_split: split does not span (non-reductive input)");

  // orthogonality under B
  for (const auto& z : center)
    for (const auto& d : derived)
      if (eval_form(killing, z, d).sign() != 0)
        throw std::logic_error("derived_center_split: center not B-orthogonal to derived");

  return {std::move(center), std::move(derived)};
}

SignatureResult signature(const QuadForm& q) {
  int n = static_cast<int>(q.gram.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.gram[i][j] != q.gram[j][i])
        throw std::invalid_argument("signature: form not symmetric");
  RatMat m = q.gram;
  SignatureResult res;
  std::vector<bool> done(n, false);
  int remaining = n;
  while (remaining > 0) {
    // symmetric pivot: first live index with nonzero diagonal
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && m[i][i].sign() != 0) { piv = i; break; }
    if (piv < 0) {
      // all live diagonal entries vanish; look for a hyperbolic pair
      int hi = -1, hj = -1;
      for (int i = 0; i < n && hi < 0; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j)
          if (!done[j] && j != i && m[i][j].sign() != 0) { hi = i; hj = j; break; }
      }
      if (hi < 0) {
        res.n_zero += remaining;
        break;
      }
      // row/col i += row/col j makes the diagonal nonzero (2 m_ij)
      for (int t = 0; t < n; ++t) m[hi][t] += m[hj][t];
      for (int t = 0; t < n; ++t) m[t][hi] += m[t][hj];
      continue;
    }
    Rational d = m[piv][piv];
    if (d.sign() > 0) ++res.n_plus; else ++res.n_minus;
    // clear the pivot row/column symmetrically
    for (int i = 0; i < n; ++i) {
      if (done[i] || i == piv || m[i][piv].sign() == 0) continue;
      Rational f = m[i][piv] / d;
      for (int t = 0; t < n; ++t) m[i][t] -= f * m[piv][t];
      for (int t = 0; t < n; ++t) m[t][i] -= f * m[t][piv];
    }
    done[piv] = true;
    --remaining;
  }
  return res;
}

int q_from_dim_sign(int dim_gprime, int sign) {
  int s = dim_gprime + sign;
  if (s < 0 || s % 2 != 0)
    throw std::invalid_argument("q_from_dim_sign: dim + sign must be even and nonnegative");
  return s / 2;
}

EulerSign euler_sign(int q) {
  if (q < 0) throw std::invalid_argument("euler_sign: q must be >= 0");
  if (q % 2 != 0) return {true, 0};
  return {false, (q / 2) % 2 == 0 ? 1 : -1};
}

RohlfsSum rohlfs_sum(const std::vector<Rational>& class_chis, int delta) {
  if (delta != 1 && delta != -1)
    throw std::invalid_argument("rohlfs_sum: delta must be +1 or -1");
  RohlfsSum r;
  r.lefschetz = 0;
  for (const Rational& chi : class_chis) {
    r.lefschetz += chi;
    if ((Rational(delta) * chi).sign() < 0) r.coherent = false;
  }
  return r;
}

bool mod8_signature_check(int sign_a, int sign_b) {
  return ((sign_a - sign_b) % 8 + 8) % 8 == 0;
}

}  // namespace towerlab
