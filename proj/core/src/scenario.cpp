#include "towerlab/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace towerlab {

Scenario make_scenario(std::string name, const LatticeAction& act, int64_t p,
                       int64_t ell, int depth) {
  if (!is_prime(p) || !is_prime(ell))
    throw std::invalid_argument("scenario: p and ell must be prime");
  if (p == ell) throw std::invalid_argument("scenario: need ell != p");
  int m = act.order;
  while (m % ell == 0) m /= static_cast<int>(ell);
  if (m != 1) throw std::invalid_argument("scenario: |Theta| must be a power of ell");
  if (depth < 1) throw std::invalid_argument("scenario: depth must be >= 1");

  Scenario s;
  s.name = std::move(name);
  s.action = act;
  s.p = p;
  s.ell = ell;
  s.depth = depth;
  s.gamma_desc = GroupDescriptor::free_abelian(act.dim);

  IntMat b = sub(act.matrix, IntMat::identity(act.dim));
  int fixed_rank = kernel_lattice(b).cols;
  // Abelian Gamma: conjugation is trivial, every twisted fixed group is the
  // untwisted one, free abelian of the fixed-subspace rank.
  s.fixed_desc = GroupDescriptor::free_abelian(fixed_rank);
  s.lambda = fixed_rank;  // Gamma_n^Theta = p^{n-1} (fixed lattice)
  return s;
}

bool valid_cofinal_scales(const std::vector<cpp_int>& scales, int64_t p) {
  if (scales.empty() || scales[0] != 1) return false;
  for (size_t i = 0; i + 1 < scales.size(); ++i) {
    if (scales[i + 1] % scales[i] != 0) return false;
    // elementary abelian step: quotient exponent must be exactly p
    if (scales[i + 1] / scales[i] != p) return false;
  }
  return true;
}

cpp_int adem_rhs(const Scenario& s, int level, int64_t r) {
  if (level < 1 || level > s.depth)
    throw std::invalid_argument("adem_rhs: level out of range");
  AbelianStructure h = h1_lattice(s.action);
  if (!h.finite())
    throw std::invalid_argument("adem_rhs: H^1 infinite, scenario unsupported");
  cpp_int classes = h.order();
  BettiVector fixed = betti_mod_l(s.fixed_desc, s.ell);
  return classes * tail_sum(fixed, r);
}

SmithFloydResult smith_floyd_check(const Scenario& s, int level, int64_t r) {
  SmithFloydResult res;
  res.lhs = tail_sum(betti_mod_l(s.gamma_desc, s.ell), r);
  res.rhs = adem_rhs(s, level, r);
  res.holds = res.lhs >= res.rhs;
  return res;
}

ChainResult chain_inequality(const Scenario& s, int level, int64_t r) {
  ChainResult res;
  res.tail_gamma = tail_sum(betti_mod_l(s.gamma_desc, s.ell), r);
  res.adem = adem_rhs(s, level, r);
  cpp_int q = boost::multiprecision::pow(cpp_int(s.p), static_cast<unsigned>(level - 1));
  cpp_int ker = lattice_restriction_kernel_size(s.action, q);
  res.kernel_bound = ker * tail_sum(betti_mod_l(s.fixed_desc, s.ell), r);
  res.holds = res.tail_gamma >= res.adem && res.adem >= res.kernel_bound;
  return res;
}

GrowthReport growth_fit(const Scenario& s, int64_t r) {
  GrowthReport g;
  for (int n = 1; n <= s.depth; ++n) {
    g.indices.push_back(boost::multiprecision::pow(
        cpp_int(s.p), static_cast<unsigned>((n - 1) * s.action.dim)));
    g.values.push_back(adem_rhs(s, n, r));
  }
  g.predicted = Rational(cpp_int(s.fixed_desc.param - s.lambda), cpp_int(s.action.dim));

  bool all_equal = true;
  for (const auto& v : g.values)
    if (v != g.values[0]) all_equal = false;
  if (g.indices.size() < 2 || all_equal) {
    g.degenerate = true;
    g.fitted_exponent = 0.0;
    return g;
  }

  // OLS on (log index, log value)
  size_t n = g.indices.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = std::log(g.indices[i].convert_to<double>());
    ys[i] = std::log(g.values[i].convert_to<double>());
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  g.fitted_exponent = (n * sxy - sx * sy) / denom;
  double intercept = (sy - g.fitted_exponent * sx) / n;
  for (size_t i = 0; i < n; ++i) {
    double e = ys[i] - (g.fitted_exponent * xs[i] + intercept);
    g.residual += e * e;
  }
  return g;
}

}  // namespace towerlab
