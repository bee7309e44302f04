#include "towerlab/betti.hpp"

#include <stdexcept>

#include "towerlab/modpk.hpp"

namespace towerlab {

GroupDescriptor GroupDescriptor::free_group(int64_t rank) {
  if (rank < 0) throw std::invalid_argument("free_group: negative rank");
  GroupDescriptor g;
  g.kind = Kind::Free;
  g.param = rank;
  return g;
}

GroupDescriptor GroupDescriptor::free_abelian(int64_t rank) {
  if (rank < 0) throw std::invalid_argument("free_abelian: negative rank");
  GroupDescriptor g;
  g.kind = Kind::FreeAbelian;
  g.param = rank;
  return g;
}

GroupDescriptor GroupDescriptor::finite_cyclic(int64_t order) {
  if (order < 1) throw std::invalid_argument("finite_cyclic: order must be >= 1");
  GroupDescriptor g;
  g.kind = Kind::FiniteCyclic;
  g.param = order;
  return g;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> fs) {
  GroupDescriptor g;
  g.kind = Kind::Product;
  g.factors = std::move(fs);
  return g;
}

bool GroupDescriptor::torsion_free() const {
  switch (kind) {
    case Kind::Trivial:
    case Kind::Free:
    case Kind::FreeAbelian: return true;
    case Kind::FiniteCyclic: return param == 1;
    case Kind::Product:
      for (const auto& f : factors)
        if (!f.torsion_free()) return false;
      return true;
  }
  return false;
}

std::string GroupDescriptor::str() const {
  switch (kind) {
    case Kind::Trivial: return "1";
    case Kind::Free: return "F_" + std::to_string(param);
    case Kind::FreeAbelian: return "Z^" + std::to_string(param);
    case Kind::FiniteCyclic: return "Z/" + std::to_string(param);
    case Kind::Product: {
      std::string s = "(";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].str();
      }
      return s + ")";
    }
  }
  return "?";
}

namespace {

cpp_int binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Per-degree coefficient, recursive; exact for infinite-support cases.
cpp_int coeff(const GroupDescriptor& g, int64_t ell, int64_t i) {
  if (i < 0) return 0;
  switch (g.kind) {
    case GroupDescriptor::Kind::Trivial: return i == 0 ? 1 : 0;
    case GroupDescriptor::Kind::Free:
      if (i == 0) return 1;
      if (i == 1) return g.param;
      return 0;
    case GroupDescriptor::Kind::FreeAbelian: return binomial(g.param, i);
    case GroupDescriptor::Kind::FiniteCyclic:
      if (g.param % ell == 0) return 1;  // periodic resolution, all degrees
      return i == 0 ? 1 : 0;
    case GroupDescriptor::Kind::Product: {
      // Kuenneth convolution over a field
      if (g.factors.empty()) return i == 0 ? 1 : 0;
      GroupDescriptor head = g.factors[0];
      GroupDescriptor rest = GroupDescriptor::product(
          std::vector<GroupDescriptor>(g.factors.begin() + 1, g.factors.end()));
      cpp_int s = 0;
      for (int64_t j = 0; j <= i; ++j) {
        cpp_int a = coeff(head, ell, j);
        if (a != 0) s += a * coeff(rest, ell, i - j);
      }
      return s;
    }
  }
  return 0;
}

// Degree above which all coefficients vanish, or nullopt for infinite support.
std::optional<int64_t> support_bound(const GroupDescriptor& g, int64_t ell) {
  switch (g.kind) {
    case GroupDescriptor::Kind::Trivial: return 0;
    case GroupDescriptor::Kind::Free: return g.param > 0 ? 1 : 0;
    case GroupDescriptor::Kind::FreeAbelian: return g.param;
    case GroupDescriptor::Kind::FiniteCyclic:
      if (g.param % ell == 0) return std::nullopt;
      return 0;
    case GroupDescriptor::Kind::Product: {
      int64_t total = 0;
      for (const auto& f : g.factors) {
        auto b = support_bound(f, ell);
        if (!b) return std::nullopt;
        total += *b;
      }
      return total;
    }
  }
  return std::nullopt;
}

}  // namespace

cpp_int BettiVector::at(int64_t degree) const {
  if (finite_support) {
    if (degree < 0 || degree >= static_cast<int64_t>(coeffs.size())) return 0;
    return coeffs[degree];
  }
  return coeff(desc, ell, degree);
}

BettiVector betti_mod_l(const GroupDescriptor& g, int64_t ell) {
  if (!is_prime(ell)) throw std::invalid_argument("betti_mod_l: ell must be prime");
  BettiVector v;
  v.ell = ell;
  v.desc = g;
  auto bound = support_bound(g, ell);
  v.finite_support = bound.has_value();
  if (v.finite_support) {
    v.coeffs.resize(*bound + 1);
    for (int64_t i = 0; i <= *bound; ++i) v.coeffs[i] = coeff(g, ell, i);
    while (!v.coeffs.empty() && v.coeffs.back() == 0) v.coeffs.pop_back();
  }
  return v;
}

cpp_int tail_sum(const BettiVector& v, int64_t r, std::optional<int64_t> degree_cap) {
  if (r < 0) r = 0;
  int64_t top;
  if (v.finite_support) {
    top = static_cast<int64_t>(v.coeffs.size()) - 1;
    if (degree_cap && *degree_cap < top) top = *degree_cap;
  } else {
    if (!degree_cap)
      throw std::invalid_argument("tail_sum: infinite support needs a degree cap");
    top = *degree_cap;
  }
  cpp_int s = 0;
  for (int64_t i = r; i <= top; ++i) s += v.at(i);
  return s;
}

int rank_mod_ell(const std::vector<std::vector<int64_t>>& m, int64_t ell) {
  if (m.empty()) return 0;
  auto w = m;
  int rows = static_cast<int>(w.size());
  int cols = static_cast<int>(w[0].size());
  for (auto& row : w)
    for (auto& v : row) v = ((v % ell) + ell) % ell;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (w[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(w[piv], w[rank]);
    int64_t inv = 1, base = w[rank][col], e = ell - 2;
    while (e) {
      if (e & 1) inv = inv * base % ell;
      base = base * base % ell;
      e >>= 1;
    }
    for (int j = 0; j < cols; ++j) w[rank][j] = w[rank][j] * inv % ell;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || w[i][col] == 0) continue;
      int64_t f = w[i][col];
      for (int j = 0; j < cols; ++j)
        w[i][j] = ((w[i][j] - f * w[rank][j]) % ell + ell) % ell;
    }
    ++rank;
  }
  return rank;
}

std::pair<int, int> cohomology_of_Z_with_module(const FlModule& m) {
  if (!is_prime(m.ell)) throw std::invalid_argument("FlModule: ell must be prime");
  if (static_cast<int>(m.action.size()) != m.dim)
    throw std::invalid_argument("FlModule: action shape mismatch");
  if (rank_mod_ell(m.action, m.ell) != m.dim)
    throw std::invalid_argument("cohomology_of_Z_with_module: singular action");
  auto t_minus_1 = m.action;
  for (int i = 0; i < m.dim; ++i)
    t_minus_1[i][i] = ((t_minus_1[i][i] - 1) % m.ell + m.ell) % m.ell;
  int rank = rank_mod_ell(t_minus_1, m.ell);
  int h0 = m.dim - rank;   // ker(t - 1)
  int h1 = m.dim - rank;   // coker(t - 1)
  return {h0, h1};
}

Rational euler_char(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupDescriptor::Kind::Trivial: return 1;
    case GroupDescriptor::Kind::Free: return Rational(1 - g.param);
    case GroupDescriptor::Kind::FreeAbelian: return g.param == 0 ? 1 : 0;
    case GroupDescriptor::Kind::FiniteCyclic: return 1;
    case GroupDescriptor::Kind::Product: {
      Rational r = 1;
      for (const auto& f : g.factors) r *= euler_char(f);
      return r;
    }
  }
  return 0;
}

Rational chi_finite_index(const Rational& chi_base, const cpp_int& index) {
  if (index < 1) throw std::invalid_argument("chi_finite_index: index must be >= 1");
  return chi_base * Rational(index);
}

}  // namespace towerlab
