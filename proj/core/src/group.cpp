#include "towerlab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace towerlab {

void FiniteGroup::finalize() {
  idx_.clear();
  idx_.reserve(elems.size() * 2);
  for (size_t i = 0; i < elems.size(); ++i) idx_[elems[i]] = static_cast<int>(i);
  inv_cache_.assign(elems.size(), -1);
}

int FiniteGroup::mul(int i, int j) const {
  Enc e = mul_enc(elems[i], elems[j]);
  int r = index_of(e);
  if (r < 0) throw std::logic_error("FiniteGroup: product left the element set");
  return r;
}

int FiniteGroup::inv(int i) const {
  if (inv_cache_[i] >= 0) return inv_cache_[i];
  int id = index_of(identity);
  int acc = i, prev = id;
  while (acc != id) {
    prev = acc;
    acc = mul(acc, i);
  }
  // prev * i = identity
  inv_cache_[i] = prev;
  inv_cache_[prev] = i;
  return prev;
}

int FiniteGroup::conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

int FiniteGroup::comm(int x, int y) const {
  return mul(mul(x, y), mul(inv(x), inv(y)));
}

int FiniteGroup::element_order(int i) const {
  int id = index_of(identity);
  int acc = i, n = 1;
  while (acc != id) {
    acc = mul(acc, i);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_p_group(int64_t* p_out) const {
  size_t n = size();
  if (n == 1) {
    if (p_out) *p_out = 0;
    return true;
  }
  int64_t p = 2;
  while (n % p != 0) {
    ++p;
    if (static_cast<size_t>(p) > n) return false;
  }
  while (n % p == 0) n /= p;
  if (n != 1) return false;
  if (p_out) *p_out = p;
  return true;
}

size_t closure_cap() {
  if (const char* env = std::getenv("TOWERLAB_ELEMENT_CAP")) {
    long long v = std::atoll(env);
    if (v > 0) return static_cast<size_t>(v);
  }
  return kDefaultClosureCap;
}

GroupPtr closure(const std::vector<Enc>& generators, MulFn mul, Enc identity,
                 size_t cap) {
  if (generators.empty()) throw std::invalid_argument("closure: no generators");
  if (cap == 0) cap = closure_cap();

  auto g = std::make_shared<FiniteGroup>();
  g->identity = identity;
  g->mul_enc = mul;

  std::unordered_map<Enc, int, EncHash> seen;
  g->elems.push_back(identity);
  seen[identity] = 0;

  std::vector<Enc> gens_sorted = generators;
  std::sort(gens_sorted.begin(), gens_sorted.end());
  gens_sorted.erase(std::unique(gens_sorted.begin(), gens_sorted.end()),
                    gens_sorted.end());

  std::vector<Enc> frontier = {identity};
  while (!frontier.empty()) {
    std::vector<Enc> next;
    for (const Enc& e : frontier)
      for (const Enc& s : gens_sorted) {
        Enc prod = mul(e, s);
        if (seen.count(prod)) continue;
        seen[prod] = -1;  // mark; real index assigned after layer sort
        next.push_back(std::move(prod));
      }
    std::sort(next.begin(), next.end());
    for (const Enc& e : next) {
      if (g->elems.size() >= cap)
        throw std::runtime_error("closure: element cap exceeded");
      g->elems.push_back(e);
    }
    frontier = std::move(next);
  }

  g->finalize();
  for (const Enc& s : gens_sorted) g->gens.push_back(g->index_of(s));
  return g;
}

GroupPtr subgroup(const GroupPtr& parent, const std::vector<int>& elem_indices) {
  auto g = std::make_shared<FiniteGroup>();
  g->identity = parent->identity;
  g->mul_enc = parent->mul_enc;
  std::vector<int> sorted = elem_indices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int i : sorted) g->elems.push_back(parent->elems[i]);
  g->finalize();
  if (g->index_of(g->identity) < 0)
    throw std::invalid_argument("subgroup: identity missing");
  for (size_t i = 0; i < g->elems.size(); ++i) g->gens.push_back(static_cast<int>(i));
  return g;
}

bool same_elements(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.size() != b.size()) return false;
  for (const Enc& e : a.elems)
    if (!b.contains(e)) return false;
  return true;
}

bool is_subgroup_of(const FiniteGroup& sub, const FiniteGroup& g) {
  for (const Enc& e : sub.elems)
    if (!g.contains(e)) return false;
  return true;
}

bool is_normal_in(const FiniteGroup& n, const FiniteGroup& g) {
  if (!is_subgroup_of(n, g)) return false;
  for (int gi : g.gens) {
    for (const Enc& e : n.elems) {
      int x = g.index_of(e);
      if (!n.contains(g.elems[g.conj(gi, x)])) return false;
    }
  }
  return true;
}

Enc encode_mat(const MatZpk& m) { return m.a; }

MatZpk decode_mat(const Enc& e, PrimePower mod, int n) {
  MatZpk m(mod, n);
  m.a = e;
  return m;
}

MulFn matrix_mul_rule(PrimePower mod, int n) {
  return [mod, n](const Enc& a, const Enc& b) {
    return encode_mat(mat_mul(decode_mat(a, mod, n), decode_mat(b, mod, n)));
  };
}

int lie_dimension(MatrixFamily family, int n) {
  switch (family) {
    case MatrixFamily::SL: return n * n - 1;
    case MatrixFamily::GL: return n * n;
    case MatrixFamily::Sp: {
      if (n % 2 != 0) throw std::invalid_argument("Sp: even dimension required");
      int half = n / 2;
      return half * (2 * half + 1);
    }
  }
  throw std::invalid_argument("unknown family");
}

namespace {

// Elementary matrix I + c * e_ij mod p^k.
MatZpk elem_mat(PrimePower pk, int n, int i, int j, int64_t c) {
  MatZpk m = MatZpk::identity(pk, n);
  m.at(i, j) = ((c % pk.modulus) + pk.modulus) % pk.modulus;
  return m;
}

std::vector<MatZpk> sl_kernel_generators(PrimePower pk, int n, int64_t t) {
  std::vector<MatZpk> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) gens.push_back(elem_mat(pk, n, i, j, t));
  // torus part: diag(..., 1+t, (1+t)^-1, ...), determinant one
  int64_t u = (1 + t) % pk.modulus;
  int64_t uinv = 0;
  {
    MatZpk one(pk, 1);
    one.at(0, 0) = u;
    uinv = invert_mod_pk(one).at(0, 0);
  }
  for (int i = 0; i + 1 < n; ++i) {
    MatZpk m = MatZpk::identity(pk, n);
    m.at(i, i) = u;
    m.at(i + 1, i + 1) = uinv;
    gens.push_back(m);
  }
  return gens;
}

std::vector<MatZpk> gl_kernel_generators(PrimePower pk, int n, int64_t t) {
  std::vector<MatZpk> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gens.push_back(elem_mat(pk, n, i, j, i == j ? 1 + t : t));
  return gens;
}

// Symplectic Lie algebra basis for sp_2h: [[A, B], [C, -A^T]], B, C symmetric.
std::vector<MatZpk> sp_algebra_basis(PrimePower pk, int h) {
  int n = 2 * h;
  std::vector<MatZpk> basis;
  auto zero = MatZpk(pk, n);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      MatZpk m = zero;
      m.at(i, j) = 1;
      m.at(h + j, h + i) = pk.modulus - 1;
      basis.push_back(m);
    }
  for (int i = 0; i < h; ++i)
    for (int j = i; j < h; ++j) {
      MatZpk b = zero;
      b.at(i, h + j) = 1;
      b.at(j, h + i) = 1;
      basis.push_back(b);
      MatZpk c = zero;
      c.at(h + i, j) = 1;
      c.at(h + j, i) = 1;
      basis.push_back(c);
    }
  return basis;
}

// Cayley transform (I + (t/2) X)(I - (t/2) X)^-1; symplectic for X in sp,
// congruent to I + tX mod t^2. Needs p odd.
MatZpk cayley(PrimePower pk, const MatZpk& x, int64_t t) {
  int64_t half = 0;
  {
    MatZpk two(pk, 1);
    two.at(0, 0) = 2;
    half = invert_mod_pk(two).at(0, 0);
  }
  int64_t th = static_cast<int64_t>((__int128)t * half % pk.modulus);
  MatZpk sx(pk, x.n);
  for (size_t i = 0; i < x.a.size(); ++i)
    sx.a[i] = static_cast<int64_t>((__int128)x.a[i] * th % pk.modulus);
  MatZpk plus = mat_add(MatZpk::identity(pk, x.n), sx);
  MatZpk minus = MatZpk::identity(pk, x.n);
  for (size_t i = 0; i < x.a.size(); ++i)
    minus.a[i] = ((minus.a[i] - sx.a[i]) % pk.modulus + pk.modulus) % pk.modulus;
  return mat_mul(plus, invert_mod_pk(minus));
}

}  // namespace

GroupPtr congruence_kernel(MatrixFamily family, int n, PrimePower pk, int level_m) {
  if (pk.p == 2) throw std::invalid_argument("congruence_kernel: p must be odd");
  if (level_m < 1 || level_m > pk.k)
    throw std::invalid_argument("congruence_kernel: need 1 <= m <= k");
  if (level_m == pk.k) {
    return closure({encode_mat(MatZpk::identity(pk, n))}, matrix_mul_rule(pk, n),
                   encode_mat(MatZpk::identity(pk, n)));
  }
  int64_t t = pow_i64(pk.p, level_m);
  std::vector<MatZpk> gen_mats;
  switch (family) {
    case MatrixFamily::SL: gen_mats = sl_kernel_generators(pk, n, t); break;
    case MatrixFamily::GL: gen_mats = gl_kernel_generators(pk, n, t); break;
    case MatrixFamily::Sp: {
      if (n % 2 != 0) throw std::invalid_argument("Sp: even dimension required");
      for (const MatZpk& x : sp_algebra_basis(pk, n / 2))
        gen_mats.push_back(cayley(pk, x, t));
      break;
    }
  }
  std::vector<Enc> gens;
  for (const MatZpk& m : gen_mats) gens.push_back(encode_mat(m));
  GroupPtr g = closure(gens, matrix_mul_rule(pk, n), encode_mat(MatZpk::identity(pk, n)));

  cpp_int expect = boost::multiprecision::pow(
      cpp_int(pk.p), static_cast<unsigned>(lie_dimension(family, n) * (pk.k - level_m)));
  if (cpp_int(g->size()) != expect)
    throw std::logic_error("congruence_kernel: generated group has wrong order");
  return g;
}

namespace {

// Smallest subgroup of g containing `seeds` that is normal in g.
GroupPtr normal_closure(const GroupPtr& g, std::vector<int> seeds) {
  std::vector<Enc> seed_encs;
  for (int s : seeds) seed_encs.push_back(g->elems[s]);
  for (;;) {
    GroupPtr h = closure(seed_encs.empty() ? std::vector<Enc>{g->identity} : seed_encs,
                         g->mul_enc, g->identity);
    bool grew = false;
    for (int gi : g->gens) {
      for (const Enc& e : h->elems) {
        int x = g->index_of(e);
        if (x < 0) throw std::logic_error("normal_closure: escaped parent");
        Enc c = g->elems[g->conj(gi, x)];
        if (!h->contains(c)) {
          seed_encs.push_back(c);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) {
      // re-index into parent ordering
      std::vector<int> idxs;
      for (const Enc& e : h->elems) idxs.push_back(g->index_of(e));
      auto sub = subgroup(g, idxs);
      return sub;
    }
  }
}

}  // namespace

GroupPtr frattini(const GroupPtr& g) {
  int64_t p = 0;
  if (!g->is_p_group(&p))
    throw std::invalid_argument("frattini: not a p-group");
  if (g->size() == 1) return g;

  std::vector<int> gens = g->gens;
  if (gens.empty())
    for (size_t i = 0; i < g->size(); ++i) gens.push_back(static_cast<int>(i));

  std::set<int> seeds;
  for (int gi : gens) {
    int acc = gi;
    for (int64_t e = 1; e < p; ++e) acc = g->mul(acc, gi);
    seeds.insert(acc);  // gi^p
  }
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      seeds.insert(g->comm(gens[a], gens[b]));
  seeds.erase(g->index_of(g->identity));

  return normal_closure(g, std::vector<int>(seeds.begin(), seeds.end()));
}

SeriesData lower_p_series(const GroupPtr& g) {
  int64_t p = 0;
  if (!g->is_p_group(&p))
    throw std::invalid_argument("lower_p_series: not a p-group");
  SeriesData s;
  s.terms.push_back(g);
  while (s.terms.back()->size() > 1) {
    GroupPtr next = frattini(s.terms.back());
    s.quotient_orders.push_back(cpp_int(s.terms.back()->size()) / cpp_int(next->size()));
    s.terms.push_back(next);
  }
  return s;
}

bool GroupHom::is_homomorphism() const {
  for (size_t i = 0; i < domain->size(); ++i)
    for (size_t j = 0; j < domain->size(); ++j) {
      int lhs = map[domain->mul(static_cast<int>(i), static_cast<int>(j))];
      int rhs = codomain->mul(map[i], map[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

QuotientResult quotient(const GroupPtr& g, const GroupPtr& n) {
  if (!is_subgroup_of(*n, *g)) throw std::invalid_argument("quotient: N not a subgroup");
  if (!is_normal_in(*n, *g)) throw std::invalid_argument("quotient: N not normal");

  const int sz = static_cast<int>(g->size());
  std::vector<int> rep_of(sz, -1);
  std::vector<int> reps;
  for (int i = 0; i < sz; ++i) {
    if (rep_of[i] >= 0) continue;
    // i is the minimal-index element of its coset (ascending scan)
    reps.push_back(i);
    for (const Enc& ne : n->elems) {
      int x = g->mul(i, g->index_of(ne));
      rep_of[x] = i;
    }
  }

  auto q = std::make_shared<FiniteGroup>();
  q->identity = g->elems[rep_of[g->index_of(g->identity)]];
  for (int r : reps) q->elems.push_back(g->elems[r]);
  // shared tables for the coset multiplication rule
  auto parent = g;
  auto rep_table = std::make_shared<std::vector<int>>(rep_of);
  q->mul_enc = [parent, rep_table](const Enc& a, const Enc& b) {
    int ia = parent->index_of(a), ib = parent->index_of(b);
    return parent->elems[(*rep_table)[parent->mul(ia, ib)]];
  };
  q->finalize();
  for (size_t i = 0; i < q->elems.size(); ++i) q->gens.push_back(static_cast<int>(i));

  GroupHom proj;
  proj.domain = g;
  proj.codomain = q;
  proj.map.resize(sz);
  for (int i = 0; i < sz; ++i) proj.map[i] = q->index_of(g->elems[rep_of[i]]);

  return {q, proj};
}

GroupPtr fixed_by(const GroupPtr& g, const std::vector<int>& perm) {
  std::vector<int> fixed;
  for (size_t i = 0; i < g->size(); ++i)
    if (perm[i] == static_cast<int>(i)) fixed.push_back(static_cast<int>(i));
  return subgroup(g, fixed);
}

GroupPtr abelian_group(int64_t modulus, int rank) {
  if (modulus < 1 || rank < 0) throw std::invalid_argument("abelian_group: bad shape");
  Enc id(rank, 0);
  MulFn addm = [modulus, rank](const Enc& a, const Enc& b) {
    Enc r(rank);
    for (int i = 0; i < rank; ++i) r[i] = (a[i] + b[i]) % modulus;
    return r;
  };
  std::vector<Enc> gens;
  for (int i = 0; i < rank; ++i) {
    Enc e(rank, 0);
    e[i] = 1 % modulus;
    gens.push_back(e);
  }
  if (gens.empty()) gens.push_back(id);
  return closure(gens, addm, id);
}

std::function<Enc(const Enc&)> linear_action(
    int64_t modulus, const std::vector<std::vector<int64_t>>& matrix) {
  return [modulus, matrix](const Enc& x) {
    size_t n = matrix.size();
    Enc r(n, 0);
    for (size_t i = 0; i < n; ++i) {
      int64_t s = 0;
      for (size_t j = 0; j < x.size(); ++j)
        s += matrix[i][j] % modulus * x[j];
      r[i] = ((s % modulus) + modulus) % modulus;
    }
    return r;
  };
}

}  // namespace towerlab
