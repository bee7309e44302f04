#include "towerlab/h1.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace towerlab {

ThetaAction make_theta_action(const GroupPtr& target, int order,
                              const std::function<Enc(const Enc&)>& sigma) {
  if (order < 1) throw std::invalid_argument("theta action: order must be >= 1");
  ThetaAction act;
  act.order = order;
  act.target = target;
  act.perm.resize(target->size());
  std::vector<bool> hit(target->size(), false);
  for (size_t i = 0; i < target->size(); ++i) {
    int j = target->index_of(sigma(target->elems[i]));
    if (j < 0)
      throw std::invalid_argument("theta action: automorphism does not stabilize group");
    act.perm[i] = j;
    hit[j] = true;
  }
  for (bool h : hit)
    if (!h) throw std::invalid_argument("theta action: not bijective");
  // sigma^order = id
  for (size_t i = 0; i < target->size(); ++i)
    if (act.apply_power(static_cast<int>(i), order) != static_cast<int>(i))
      throw std::invalid_argument("theta action: generator order does not divide m");
  // automorphism law, generator images against all elements
  for (int g : target->gens)
    for (size_t x = 0; x < target->size(); ++x) {
      int lhs = act.perm[target->mul(g, static_cast<int>(x))];
      int rhs = target->mul(act.perm[g], act.perm[x]);
      if (lhs != rhs)
        throw std::invalid_argument("theta action: not multiplicative");
    }
  return act;
}

ThetaAction trivial_theta_action(const GroupPtr& target, int order) {
  ThetaAction act;
  act.order = order;
  act.target = target;
  act.perm.resize(target->size());
  for (size_t i = 0; i < target->size(); ++i) act.perm[i] = static_cast<int>(i);
  return act;
}

ThetaAction restrict_action(const ThetaAction& act, const GroupPtr& sub) {
  ThetaAction r;
  r.order = act.order;
  r.target = sub;
  r.perm.resize(sub->size());
  for (size_t i = 0; i < sub->size(); ++i) {
    int pi = act.target->index_of(sub->elems[i]);
    if (pi < 0) throw std::invalid_argument("restrict_action: not a subgroup of target");
    int img = sub->index_of(act.target->elems[act.perm[pi]]);
    if (img < 0) throw std::invalid_argument("restrict_action: subgroup not stable");
    r.perm[i] = img;
  }
  return r;
}

std::vector<Cocycle> enumerate_cocycles(const ThetaAction& act) {
  const FiniteGroup& g = *act.target;
  int id = g.index_of(g.identity);
  std::vector<Cocycle> out;
  for (size_t i = 0; i < g.size(); ++i) {
    // norm: g * s(g) * s^2(g) * ... * s^{m-1}(g)
    int acc = static_cast<int>(i);
    int img = static_cast<int>(i);
    for (int e = 1; e < act.order; ++e) {
      img = act.perm[img];
      acc = g.mul(acc, img);
    }
    if (acc == id) out.push_back({static_cast<int>(i)});
  }
  return out;
}

int cocycle_value(const ThetaAction& act, const Cocycle& c, int e) {
  const FiniteGroup& g = *act.target;
  e %= act.order;
  int acc = g.index_of(g.identity);
  int img = c.generator_value;
  for (int t = 0; t < e; ++t) {
    acc = g.mul(acc, img);
    img = act.perm[img];
  }
  return acc;
}

bool is_cocycle(const ThetaAction& act, const Cocycle& c) {
  // a_{s^{i+j}} = a_{s^i} * s^i(a_{s^j}) for all pairs
  const FiniteGroup& g = *act.target;
  for (int i = 0; i < act.order; ++i)
    for (int j = 0; j < act.order; ++j) {
      int lhs = cocycle_value(act, c, (i + j) % act.order);
      int rhs = g.mul(cocycle_value(act, c, i),
                      act.apply_power(cocycle_value(act, c, j), i));
      if (lhs != rhs) return false;
    }
  return true;
}

H1Classes h1_finite(const ThetaAction& act) {
  const FiniteGroup& g = *act.target;
  std::vector<Cocycle> cocycles = enumerate_cocycles(act);
  std::vector<int> pos_of(g.size(), -1);
  for (size_t i = 0; i < cocycles.size(); ++i)
    pos_of[cocycles[i].generator_value] = static_cast<int>(i);

  H1Classes h;
  h.cocycle_count = cocycles.size();
  std::vector<bool> assigned(cocycles.size(), false);
  for (size_t i = 0; i < cocycles.size(); ++i) {
    if (assigned[i]) continue;
    // ascending scan: the seed is the least cocycle of its orbit
    size_t orbit = 0;
    int v = cocycles[i].generator_value;
    for (size_t hh = 0; hh < g.size(); ++hh) {
      int w = g.mul(g.mul(g.inv(static_cast<int>(hh)), v),
                    act.perm[static_cast<int>(hh)]);
      int p = pos_of[w];
      if (p < 0) throw std::logic_error("h1_finite: twist left the cocycle set");
      if (!assigned[p]) {
        assigned[p] = true;
        ++orbit;
      }
    }
    h.reps.push_back(cocycles[i]);
    h.class_sizes.push_back(orbit);
  }
  return h;
}

GroupPtr twisted_fixed_subgroup(const ThetaAction& act, const Cocycle& c) {
  const FiniteGroup& g = *act.target;
  {
    // validate the cocycle (norm condition)
    int id = g.index_of(g.identity);
    int acc = c.generator_value, img = c.generator_value;
    for (int e = 1; e < act.order; ++e) {
      img = act.perm[img];
      acc = g.mul(acc, img);
    }
    if (acc != id) throw std::invalid_argument("twisted_fixed_subgroup: invalid cocycle");
  }
  int cv = c.generator_value;
  int cinv = g.inv(cv);
  std::vector<int> fixed;
  for (size_t i = 0; i < g.size(); ++i)
    if (g.mul(g.mul(cv, act.perm[i]), cinv) == static_cast<int>(i))
      fixed.push_back(static_cast<int>(i));
  return subgroup(act.target, fixed);
}

std::vector<Cocycle> restriction_kernel(const ThetaAction& outer,
                                        const GroupPtr& inner) {
  ThetaAction in_act = restrict_action(outer, inner);
  H1Classes h = h1_finite(in_act);

  const FiniteGroup& g1 = *outer.target;
  std::unordered_set<int> coboundaries;
  for (size_t a = 0; a < g1.size(); ++a)
    coboundaries.insert(
        g1.mul(g1.inv(static_cast<int>(a)), outer.perm[static_cast<int>(a)]));

  std::vector<Cocycle> kernel;
  for (const Cocycle& c : h.reps) {
    int v1 = g1.index_of(inner->elems[c.generator_value]);
    if (coboundaries.count(v1)) kernel.push_back(c);
  }
  return kernel;
}

LatticeAction make_lattice_action(const IntMat& a, int order) {
  if (a.rows != a.cols) throw std::invalid_argument("lattice action: not square");
  if (order < 1) throw std::invalid_argument("lattice action: order must be >= 1");
  if (!(pow(a, order) == IntMat::identity(a.rows)))
    throw std::invalid_argument("lattice action: A^m != I");
  return {a.rows, order, a};
}

AbelianStructure h1_lattice(const LatticeAction& act) {
  IntMat n(act.dim, act.dim);
  IntMat power = IntMat::identity(act.dim);
  for (int e = 0; e < act.order; ++e) {
    n = add(n, power);
    power = mul(power, act.matrix);
  }
  IntMat b = sub(act.matrix, IntMat::identity(act.dim));
  return ker_mod_im(n, b);
}

cpp_int lattice_restriction_kernel_size(const LatticeAction& act, const cpp_int& q) {
  AbelianStructure h = h1_lattice(act);
  cpp_int k = 1;
  for (const auto& d : h.torsion) k *= boost::multiprecision::gcd(d, q);
  return k;
}

namespace {

int rank_mod_p(const IntMat& m, int64_t p) {
  std::vector<std::vector<int64_t>> w(m.rows, std::vector<int64_t>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      cpp_int v = m.at(i, j) % p;
      if (v < 0) v += p;
      w[i][j] = static_cast<int64_t>(v);
    }
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (w[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(w[piv], w[rank]);
    // normalize pivot via Fermat inverse
    int64_t inv = 1, base = w[rank][col] % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int j = 0; j < m.cols; ++j) w[rank][j] = w[rank][j] * inv % p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || w[i][col] == 0) continue;
      int64_t f = w[i][col];
      for (int j = 0; j < m.cols; ++j)
        w[i][j] = ((w[i][j] - f * w[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CountingReport verify_counting_formula(const LatticeAction& act, int64_t p, int n) {
  if (n < 1) throw std::invalid_argument("verify_counting_formula: level must be >= 1");
  CountingReport r;
  cpp_int q = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(n - 1));

  r.ker_hn = lattice_restriction_kernel_size(act, q);

  IntMat b = sub(act.matrix, IntMat::identity(act.dim));
  IntMat fixed = kernel_lattice(b);  // saturated, rank = dim of fixed subspace
  int rho = fixed.cols;
  r.fixed_index = boost::multiprecision::pow(q, static_cast<unsigned>(rho));

  // |(U/P_n)^Theta| = #{x mod q : (A - I) x = 0 mod q}
  SnfResult sb = smith_normal_form(b);
  r.quotient_fixed = 1;
  for (const auto& d : sb.divisors)
    if (d != 0) r.quotient_fixed *= boost::multiprecision::gcd(d, q);
  for (int i = sb.rank; i < act.dim; ++i) r.quotient_fixed *= q;

  // image of the fixed lattice inside (Z/q)^dim
  SnfResult sf = smith_normal_form(fixed);
  r.image_in_quotient = 1;
  for (const auto& d : sf.divisors)
    if (d != 0) r.image_in_quotient *= q / boost::multiprecision::gcd(d, q);

  r.delta = act.dim - rank_mod_p(b, p);

  r.sequence_ok = (r.ker_hn * r.fixed_index == r.quotient_fixed) &&
                  (r.image_in_quotient == r.fixed_index) &&
                  (r.image_in_quotient * r.ker_hn == r.quotient_fixed);
  r.power_ok = r.quotient_fixed ==
               boost::multiprecision::pow(cpp_int(p),
                                          static_cast<unsigned>((n - 1) * r.delta));
  return r;
}

FiniteCountingReport verify_counting_formula_finite(const ThetaAction& outer,
                                                    const GroupPtr& inner) {
  FiniteCountingReport r;
  r.ker_hn = cpp_int(restriction_kernel(outer, inner).size());

  GroupPtr fixed_outer = fixed_by(outer.target, outer.perm);
  ThetaAction in_act = restrict_action(outer, inner);
  GroupPtr fixed_inner = fixed_by(inner, in_act.perm);
  if (fixed_outer->size() % fixed_inner->size() != 0)
    throw std::logic_error("counting: fixed subgroup index not integral");
  r.fixed_index = cpp_int(fixed_outer->size()) / cpp_int(fixed_inner->size());

  QuotientResult q = quotient(outer.target, inner);
  // induced action on the quotient
  size_t fixed_count = 0;
  for (size_t i = 0; i < q.group->size(); ++i) {
    int parent = outer.target->index_of(q.group->elems[i]);
    int image = q.projection.apply(outer.perm[parent]);
    if (image == static_cast<int>(i)) ++fixed_count;
  }
  r.quotient_fixed = cpp_int(fixed_count);
  r.sequence_ok = r.ker_hn * r.fixed_index == r.quotient_fixed;
  return r;
}

}  // namespace towerlab
