#include "towerlab/arith.hpp"

#include <stdexcept>

#include "towerlab/modpk.hpp"

namespace towerlab {

NumberFieldData NumberFieldData::make(int s, int t, std::vector<int64_t> mu) {
  if (s < 0 || t < 0 || s + 2 * t < 1)
    throw std::invalid_argument("NumberFieldData: bad place counts");
  NumberFieldData f;
  f.real_places = s;
  f.complex_places = t;
  f.degree = s + 2 * t;
  f.roots_of_unity = std::move(mu);
  return f;
}

bool NumberFieldData::contains_mu(int64_t ell) const {
  for (int64_t l : roots_of_unity)
    if (l == ell) return true;
  return false;
}

SplitGroupData builtin_group(const std::string& family, int n) {
  SplitGroupData g;
  g.family = family;
  g.n = n;
  if (family == "SL") {
    if (n < 2) throw std::invalid_argument("builtin_group: SL_n needs n >= 2");
    g.rank = n - 1;
    g.dim = n * n - 1;
    g.dim_compact = n * (n - 1) / 2;  // SO(n)
    g.has_ds = (n == 2);
  } else if (family == "Sp") {
    if (n < 2 || n % 2 != 0)
      throw std::invalid_argument("builtin_group: Sp_n needs even n >= 2");
    int h = n / 2;
    g.rank = h;
    g.dim = h * (2 * h + 1);
    g.dim_compact = h * h;  // U(h)
    g.has_ds = true;
  } else if (family == "SO") {
    if (n < 3) throw std::invalid_argument("builtin_group: SO_n needs n >= 3");
    g.rank = n / 2;
    g.dim = n * (n - 1) / 2;
    g.dim_compact = (n / 2) * (n / 2) + ((n + 1) / 2) * ((n + 1) / 2 - 1) / 2;
    g.has_ds = false;  // depends on the real form; override via config
  } else {
    throw std::invalid_argument("builtin_group: unsupported family " + family);
  }
  return g;
}

cpp_int congruence_index(const std::string& family, int n, int64_t p, int k) {
  if (family != "SL") throw std::invalid_argument("congruence_index: only SL_n");
  if (k < 1) throw std::invalid_argument("congruence_index: k must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("congruence_index: p not prime");
  if (n < 1) throw std::invalid_argument("congruence_index: n must be >= 1");
  if (n == 1) return 1;
  cpp_int pp(p);
  cpp_int r = boost::multiprecision::pow(pp, static_cast<unsigned>((n * n - 1) * (k - 1)));
  r *= boost::multiprecision::pow(pp, static_cast<unsigned>(n * (n - 1) / 2));
  for (int i = 2; i <= n; ++i)
    r *= boost::multiprecision::pow(pp, static_cast<unsigned>(i)) - 1;
  return r;
}

Rational theorem1_exponent(int dim_fixed, int lambda, int dim_g,
                           const Rational& alpha) {
  if (!(0 <= lambda && lambda <= dim_fixed && dim_fixed <= dim_g && dim_g > 0))
    throw std::invalid_argument("theorem1_exponent: need 0 <= lambda <= dim_fixed <= dim_G");
  if (alpha < Rational(0) || alpha > Rational(1))
    throw std::invalid_argument("theorem1_exponent: alpha must lie in [0,1]");
  return Rational(cpp_int(dim_fixed - lambda), cpp_int(dim_g)) * alpha;
}

BasechangeResult basechange_exponent(int m, const SplitGroupData& g) {
  if (m < 0) throw std::invalid_argument("basechange_exponent: m must be >= 0");
  if (!g.has_ds)
    throw std::invalid_argument("basechange_exponent: group lacks discrete series");
  BasechangeResult r;
  r.exponent = Rational(cpp_int(1), boost::multiprecision::pow(cpp_int(2),
                                                               static_cast<unsigned>(m)));
  r.start_degree = g.q();
  return r;
}

Sl2nReport sl2n_example_report(int n, int m, const NumberFieldData& f,
                               const NumberFieldData& e) {
  if (n < 1) throw std::invalid_argument("sl2n: n must be >= 1");
  if (m < 0) throw std::invalid_argument("sl2n: m must be >= 0");
  if (f.complex_places != 0)
    throw std::invalid_argument("sl2n: F must be totally real");
  cpp_int two_m = boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(m));
  if (cpp_int(e.degree) != two_m * f.degree)
    throw std::invalid_argument("sl2n: [E:Q] must equal 2^m [F:Q]");

  Sl2nReport r;
  r.exponent = Rational(cpp_int(n) * (2 * n + 1), two_m * (4LL * n * n - 1));
  r.start_degree = cpp_int(f.degree) * n * (n + 1) / 2;
  r.vcd = 2 * two_m * f.degree * n * n + cpp_int(e.real_places - 2) * n -
          (e.real_places + e.complex_places - 1);
  return r;
}

SplitGroupsResult split_groups_exponent(const SplitGroupData& g,
                                        const NumberFieldData& f, int s_size,
                                        int64_t ell) {
  if (s_size < 1 || s_size > f.degree)
    throw std::invalid_argument("split_groups_exponent: need 1 <= |S| <= [F:Q]");
  if (!f.contains_mu(ell))
    throw std::invalid_argument("split_groups_exponent: F lacks the ell-th roots of unity");
  SplitGroupsResult r;
  r.alpha = Rational(cpp_int(g.rank) * (f.degree - s_size + 1),
                     cpp_int(g.dim) * f.degree);
  r.start_degree = static_cast<int64_t>(g.rank) * (s_size - 1);
  r.lambda = r.start_degree;

  // internal identity: alpha agrees with the generic exponent formula
  Rational composed = theorem1_exponent(g.rank * f.degree,
                                        static_cast<int>(r.lambda),
                                        g.dim * f.degree, Rational(1));
  if (composed != r.alpha)
    throw std::logic_error("split_groups_exponent: composition identity failed");
  return r;
}

int64_t dirichlet_unit_rank(int64_t torus_rank, int s_size) {
  if (s_size < 1) throw std::invalid_argument("dirichlet_unit_rank: |S| must be >= 1");
  return torus_rank * (s_size - 1);
}

int frattini_step(int e) {
  if (e < 1) throw std::invalid_argument("frattini_step: e must be >= 1");
  return e;
}

}  // namespace towerlab
