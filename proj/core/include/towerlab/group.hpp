#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "towerlab/modpk.hpp"

namespace towerlab {

/// Canonical element encoding. Matrix groups flatten their reduced entries;
/// quotients use the encoding of the canonical coset representative.
using Enc = std::vector<int64_t>;

struct EncHash {
  size_t operator()(const Enc& e) const {
    size_t h = 1469598103934665603ull;
    for (int64_t v : e) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

using MulFn = std::function<Enc(const Enc&, const Enc&)>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group materialized as an element table with a shared
/// multiplication rule on encodings. Immutable after construction.
class FiniteGroup {
public:
  std::vector<Enc> elems;  // canonical order (BFS layer, then encoding)
  Enc identity;
  MulFn mul_enc;
  std::vector<int> gens;  // indices of the defining generators

  size_t size() const { return elems.size(); }
  int index_of(const Enc& e) const {
    auto it = idx_.find(e);
    return it == idx_.end() ? -1 : it->second;
  }
  bool contains(const Enc& e) const { return idx_.count(e) != 0; }

  int mul(int i, int j) const;
  int inv(int i) const;
  int conj(int g, int x) const;        // g x g^-1
  int comm(int x, int y) const;        // x y x^-1 y^-1
  int element_order(int i) const;

  bool is_p_group(int64_t* p_out = nullptr) const;

  /// Builds the index map; call once after filling elems.
  void finalize();

private:
  std::unordered_map<Enc, int, EncHash> idx_;
  mutable std::vector<int> inv_cache_;
};

inline constexpr size_t kDefaultClosureCap = 2'000'000;

size_t closure_cap();  // kDefaultClosureCap, overridable via TOWERLAB_ELEMENT_CAP

/// Breadth-first closure of nonempty generators under mul. Deterministic:
/// elements ordered by BFS layer, lexicographic encoding within a layer.
GroupPtr closure(const std::vector<Enc>& generators, MulFn mul, Enc identity,
                 size_t cap = 0);

/// Subgroup on an element subset (same mul rule), ordered by the parent's
/// canonical order. Generators default to all elements.
GroupPtr subgroup(const GroupPtr& parent, const std::vector<int>& elem_indices);

bool same_elements(const FiniteGroup& a, const FiniteGroup& b);
bool is_subgroup_of(const FiniteGroup& sub, const FiniteGroup& g);
bool is_normal_in(const FiniteGroup& n, const FiniteGroup& g);

enum class MatrixFamily { SL, Sp, GL };

/// Kernel of the reduction SL_n/Sp_n/GL_n (Z/p^k) -> (Z/p^m), materialized
/// as a matrix group mod p^k. Requires p odd and 1 <= m <= k.
GroupPtr congruence_kernel(MatrixFamily family, int n, PrimePower pk, int level_m);

int lie_dimension(MatrixFamily family, int n);

Enc encode_mat(const MatZpk& m);
MatZpk decode_mat(const Enc& e, PrimePower mod, int n);
MulFn matrix_mul_rule(PrimePower mod, int n);

/// Frattini subgroup G^p [G,G] of a p-group: normal closure of generator
/// p-th powers and pairwise generator commutators.
GroupPtr frattini(const GroupPtr& g);

/// Lower p-series P_1 = G, P_{i+1} = Phi(P_i), down to the trivial group.
struct SeriesData {
  std::vector<GroupPtr> terms;
  std::vector<cpp_int> quotient_orders;  // |P_i| / |P_{i+1}|
};

SeriesData lower_p_series(const GroupPtr& g);

struct GroupHom {
  GroupPtr domain, codomain;
  std::vector<int> map;  // domain index -> codomain index

  int apply(int i) const { return map[i]; }
  bool is_homomorphism() const;
};

struct QuotientResult {
  GroupPtr group;
  GroupHom projection;
};

/// G/N with canonical (minimal-index) coset representatives.
QuotientResult quotient(const GroupPtr& g, const GroupPtr& n);

/// Elements fixed by an automorphism given as an index permutation.
GroupPtr fixed_by(const GroupPtr& g, const std::vector<int>& perm);

/// (Z/modulus)^rank as an additive group of residue vectors.
GroupPtr abelian_group(int64_t modulus, int rank);

/// x -> M x mod modulus on residue vectors; an automorphism when M is
/// invertible mod the modulus.
std::function<Enc(const Enc&)> linear_action(
    int64_t modulus, const std::vector<std::vector<int64_t>>& matrix);

}  // namespace towerlab
