#include "towerlab/suites.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "towerlab/arith.hpp"
#include "towerlab/betti.hpp"
#include "towerlab/group.hpp"
#include "towerlab/h1.hpp"
#include "towerlab/lie.hpp"
#include "towerlab/modpk.hpp"
#include "towerlab/scenario.hpp"

namespace towerlab {

namespace {

using Mat64 = std::vector<std::vector<int64_t>>;

std::string big(const cpp_int& v) { return v.str(); }

// ---- small matrix builders for abelian and lattice actions ----

Mat64 neg_identity(int b) {
  Mat64 m(b, std::vector<int64_t>(b, 0));
  for (int i = 0; i < b; ++i) m[i][i] = -1;
  return m;
}

Mat64 neg_first(int b) {
  Mat64 m(b, std::vector<int64_t>(b, 0));
  for (int i = 0; i < b; ++i) m[i][i] = i == 0 ? -1 : 1;
  return m;
}

Mat64 swap01(int b) {
  Mat64 m(b, std::vector<int64_t>(b, 0));
  m[0][1] = 1;
  m[1][0] = 1;
  for (int i = 2; i < b; ++i) m[i][i] = 1;
  return m;
}

// Order-3 block [[0,-1],[1,-1]] (a root of x^2+x+1) padded by the identity.
Mat64 rot3(int b) {
  Mat64 m(b, std::vector<int64_t>(b, 0));
  m[0][1] = -1;
  m[1][0] = 1;
  m[1][1] = -1;
  for (int i = 2; i < b; ++i) m[i][i] = 1;
  return m;
}

Mat64 cycle3(int b) {  // 3-cycle on the first three coordinates
  Mat64 m(b, std::vector<int64_t>(b, 0));
  m[0][2] = 1;
  m[1][0] = 1;
  m[2][1] = 1;
  for (int i = 3; i < b; ++i) m[i][i] = 1;
  return m;
}

Mat64 neg_pair(int b) {
  Mat64 m(b, std::vector<int64_t>(b, 0));
  for (int i = 0; i < b; ++i) m[i][i] = i < 2 ? -1 : 1;
  return m;
}

IntMat to_intmat(const Mat64& m) {
  std::vector<std::vector<long long>> rows;
  for (const auto& r : m) rows.push_back(std::vector<long long>(r.begin(), r.end()));
  return IntMat::from_rows(rows);
}

// ---- matrix-group automorphisms ----

std::function<Enc(const Enc&)> transpose_inverse_fn(PrimePower pk, int n) {
  return [pk, n](const Enc& e) {
    return encode_mat(transpose(invert_mod_pk(decode_mat(e, pk, n))));
  };
}

std::function<Enc(const Enc&)> conj_by_fn(const MatZpk& t) {
  MatZpk tinv = invert_mod_pk(t);
  return [t, tinv](const Enc& e) {
    MatZpk m = decode_mat(e, t.mod, t.n);
    return encode_mat(mat_mul(mat_mul(t, m), tinv));
  };
}

MatZpk diag_1_neg1(PrimePower pk) {
  return MatZpk::from_rows(pk, {{1, 0}, {0, pk.modulus - 1}});
}

// ---- generic H^1 structural verification for one finite scenario ----

struct FiniteScn {
  std::string name;
  GroupPtr g;
  ThetaAction act;
  bool abelian = false;
  int64_t modulus = 0;  // for abelian targets (Z/modulus)^rank
  int rank = 0;
  bool trivial_action = false;
  int64_t p = 0;  // prime of |G|
};

bool check_h1_scenario(const FiniteScn& s, std::string& computed) {
  H1Classes h = h1_finite(s.act);
  std::ostringstream os;
  os << h.reps.size();
  computed = os.str();

  // class sizes partition the cocycle set
  size_t total = 0;
  for (size_t c : h.class_sizes) total += c;
  if (total != h.cocycle_count) return false;

  size_t gsize = s.g->size();
  for (size_t i = 0; i < h.reps.size(); ++i) {
    if (!is_cocycle(s.act, h.reps[i])) return false;
    // orbit-stabilizer: the twisting stabilizer is the twisted fixed group
    GroupPtr tf = twisted_fixed_subgroup(s.act, h.reps[i]);
    if (h.class_sizes[i] * tf->size() != gsize) return false;
  }

  if (s.abelian) {
    // cocycles form a group, coboundaries a subgroup; classes are cosets
    std::unordered_set<int> cob;
    for (int x = 0; x < static_cast<int>(gsize); ++x)
      cob.insert(s.g->mul(s.g->inv(x), s.act.apply(x)));
    if (h.reps.size() * cob.size() != h.cocycle_count) return false;
  }

  if (s.trivial_action && s.abelian) {
    // Hom(Z/m, (Z/M)^b) has gcd(m, M)^b elements
    cpp_int expect = 1;
    for (int i = 0; i < s.rank; ++i)
      expect *= std::gcd(static_cast<int64_t>(s.act.order), s.modulus);
    if (cpp_int(h.reps.size()) != expect) return false;
  }

  if (s.p != 0 && s.act.order % s.p != 0) {
    // coprime orders: the pointed set H^1 is trivial
    if (h.reps.size() != 1) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

Report suite_lemma_h1() {
  Report rep;
  rep.suite = "lemma-h1";

  std::vector<FiniteScn> scns;
  auto add_abelian = [&](int64_t p, int64_t mod, int b, const std::string& aname,
                         int order, const Mat64* mat) {
    GroupPtr g = abelian_group(mod, b);
    ThetaAction act = mat ? make_theta_action(g, order, linear_action(mod, *mat))
                          : trivial_theta_action(g, order);
    std::ostringstream nm;
    nm << "A(" << mod << "^" << b << ")-" << aname;
    scns.push_back({nm.str(), g, act, true, mod, b, mat == nullptr, p});
  };

  struct Shape { int64_t p, mod; int b; };
  std::vector<Shape> shapes = {
      {3, 3, 1},  {3, 3, 2},  {3, 3, 3}, {3, 3, 4}, {3, 9, 1},  {3, 9, 2},
      {3, 27, 1}, {5, 5, 1},  {5, 5, 2}, {5, 5, 3}, {5, 5, 4},  {5, 25, 1},
      {5, 25, 2}, {5, 125, 1}, {7, 7, 1}, {7, 7, 2}, {7, 49, 1}};
  for (const Shape& s : shapes) {
    add_abelian(s.p, s.mod, s.b, "triv2", 2, nullptr);
    add_abelian(s.p, s.mod, s.b, "triv3", 3, nullptr);
    Mat64 inv = neg_identity(s.b);
    add_abelian(s.p, s.mod, s.b, "inv", 2, &inv);
    if (s.b >= 2) {
      Mat64 nf = neg_first(s.b), sw = swap01(s.b), r3 = rot3(s.b);
      add_abelian(s.p, s.mod, s.b, "negfirst", 2, &nf);
      add_abelian(s.p, s.mod, s.b, "swap", 2, &sw);
      add_abelian(s.p, s.mod, s.b, "rot3", 3, &r3);
    }
  }

  // non-abelian targets: congruence kernels of SL_2 with order-2 actions
  struct KShape { int64_t p; int k, m; };
  for (const KShape& ks : std::vector<KShape>{{3, 2, 1}, {3, 3, 2}, {5, 2, 1}}) {
    PrimePower pk = PrimePower::make(ks.p, ks.k);
    GroupPtr g = congruence_kernel(MatrixFamily::SL, 2, pk, ks.m);
    {
      std::ostringstream nm;
      nm << "K(SL2," << ks.p << "^" << ks.k << ",m=" << ks.m << ")-tinv";
      ThetaAction act = make_theta_action(g, 2, transpose_inverse_fn(pk, 2));
      scns.push_back({nm.str(), g, act, false, 0, 0, false, ks.p});
    }
    {
      std::ostringstream nm;
      nm << "K(SL2," << ks.p << "^" << ks.k << ",m=" << ks.m << ")-dconj";
      ThetaAction act = make_theta_action(g, 2, conj_by_fn(diag_1_neg1(pk)));
      scns.push_back({nm.str(), g, act, false, 0, 0, false, ks.p});
    }
  }

  // Frattini quotients of congruence kernels, with the induced action
  for (const KShape& ks : std::vector<KShape>{{3, 3, 1}, {5, 2, 1}}) {
    PrimePower pk = PrimePower::make(ks.p, ks.k);
    GroupPtr g = congruence_kernel(MatrixFamily::SL, 2, pk, ks.m);
    QuotientResult q = quotient(g, frattini(g));
    for (int which = 0; which < 2; ++which) {
      auto fn = which == 0 ? transpose_inverse_fn(pk, 2)
                           : conj_by_fn(diag_1_neg1(pk));
      auto proj = q.projection;
      auto qgroup = q.group;
      auto qsigma = [g, qgroup, proj, fn](const Enc& e) {
        return qgroup->elems[proj.map[g->index_of(fn(e))]];
      };
      ThetaAction act = make_theta_action(qgroup, 2, qsigma);
      std::ostringstream nm;
      nm << "Q(SL2," << ks.p << "^" << ks.k << ")-"
         << (which == 0 ? "tinv" : "dconj");
      scns.push_back({nm.str(), qgroup, act, false, 0, 0, false, ks.p});
    }
  }

  size_t coprime = 0;
  for (const FiniteScn& s : scns) {
    std::string computed;
    bool ok = check_h1_scenario(s, computed);
    if (s.p != 0 && s.act.order % s.p != 0) {
      ++coprime;
      ok = ok && computed == "1";  // coprime orders: H^1 must be a point
    }
    rep.add_bool(s.name, "h1.classes", ok, computed);
  }
  rep.add_bool("coprime-scenario-count", "h1.coverage", coprime >= 50,
               std::to_string(coprime), ">= 50");
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_prop_uniform() {
  Report rep;
  rep.suite = "prop-uniform";

  struct Case { int64_t p; int k, m; };
  std::vector<Case> cases = {{3, 2, 1}, {3, 3, 1}, {3, 3, 2},
                             {5, 2, 1}, {5, 3, 1}, {5, 3, 2}};
  for (const Case& c : cases) {
    PrimePower pk = PrimePower::make(c.p, c.k);
    GroupPtr g = congruence_kernel(MatrixFamily::SL, 2, pk, c.m);

    // one Frattini step raises the congruence level by exactly one
    {
      GroupPtr phi = frattini(g);
      GroupPtr next = congruence_kernel(MatrixFamily::SL, 2, pk, c.m + 1);
      std::ostringstream nm;
      nm << "frattini-level(" << c.p << "^" << c.k << ",m=" << c.m << ")";
      rep.add_bool(nm.str(), "series.step", same_elements(*phi, *next),
                   big(cpp_int(phi->size())), big(cpp_int(next->size())));
    }

    for (int which = 0; which < 2; ++which) {
      ThetaAction act =
          which == 0 ? make_theta_action(g, 2, transpose_inverse_fn(pk, 2))
                     : make_theta_action(g, 2, conj_by_fn(diag_1_neg1(pk)));
      const char* aname = which == 0 ? "tinv" : "dconj";
      GroupPtr fixed = fixed_by(g, act.perm);

      SeriesData sg = lower_p_series(g);
      SeriesData sf = lower_p_series(fixed);

      bool ok = sg.terms.size() == sf.terms.size();
      for (size_t i = 0; ok && i < sg.terms.size(); ++i) {
        ThetaAction ra = restrict_action(act, sg.terms[i]);
        GroupPtr term_fixed = fixed_by(sg.terms[i], ra.perm);
        ok = same_elements(*term_fixed, *sf.terms[i]);
      }
      std::ostringstream nm;
      nm << "series-commutes(" << c.p << "^" << c.k << ",m=" << c.m << ","
         << aname << ")";
      rep.add_bool(nm.str(), "series.fixed", ok,
                   std::to_string(sf.terms.size()) + " terms");

      // dim of the Frattini quotient: fixing and reducing commute
      QuotientResult q = quotient(g, frattini(g));
      auto proj = q.projection;
      auto qgroup = q.group;
      auto base = act;
      auto qsigma = [g, qgroup, proj, base](const Enc& e) {
        int pi = g->index_of(e);
        int image = base.apply(pi);
        return qgroup->elems[proj.map[image]];
      };
      ThetaAction qact = make_theta_action(qgroup, 2, qsigma);
      GroupPtr qfixed = fixed_by(qgroup, qact.perm);
      QuotientResult fq = quotient(fixed, frattini(fixed));
      std::ostringstream nm2;
      nm2 << "frattini-quotient-dim(" << c.p << "^" << c.k << ",m=" << c.m
          << "," << aname << ")";
      rep.add_bool(nm2.str(), "series.dim", qfixed->size() == fq.group->size(),
                   big(cpp_int(qfixed->size())), big(cpp_int(fq.group->size())));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// Indices of elements of (Z/mod)^b with every coordinate divisible by c.
GroupPtr scaled_sublattice(const GroupPtr& g, int64_t c) {
  std::vector<int> idx;
  for (size_t i = 0; i < g->size(); ++i) {
    bool in = true;
    for (int64_t v : g->elems[i])
      if (v % c != 0) in = false;
    if (in) idx.push_back(static_cast<int>(i));
  }
  return subgroup(g, idx);
}

}  // namespace

Report suite_counting() {
  Report rep;
  rep.suite = "counting";

  struct Row {
    std::string name;
    Mat64 mat;
    int order, dim;
    std::vector<int64_t> primes;
  };
  std::vector<Row> rows = {
      {"neg-d1", neg_identity(1), 2, 1, {3, 5}},
      {"neg-d2", neg_identity(2), 2, 2, {3, 5}},
      {"neg-d3", neg_identity(3), 2, 3, {3, 5}},
      {"swap-d2", swap01(2), 2, 2, {3, 5}},
      {"negpair-d3", neg_pair(3), 2, 3, {3, 5}},
      {"rot3-d2", rot3(2), 3, 2, {5, 7}},
      {"cyc3-d3", cycle3(3), 3, 3, {5, 7}},
  };
  for (const Row& r : rows) {
    LatticeAction act = make_lattice_action(to_intmat(r.mat), r.order);
    for (int64_t p : r.primes) {
      bool ok = true;
      std::ostringstream vals;
      for (int n = 1; n <= 4; ++n) {
        CountingReport cr = verify_counting_formula(act, p, n);
        ok = ok && cr.sequence_ok && cr.power_ok;
        if (n > 1) vals << ",";
        vals << cr.ker_hn;
      }
      std::ostringstream nm;
      nm << r.name << "-p" << p;
      rep.add_bool(nm.str(), "count.exact", ok, "ker=" + vals.str());
    }
  }

  // pinned torsion of the restriction kernel for scales sharing a factor
  // with H^1 (outside the coprime tower regime, where it is always 1)
  {
    LatticeAction inv1 = make_lattice_action(to_intmat(neg_identity(1)), 2);
    LatticeAction inv2 = make_lattice_action(to_intmat(neg_identity(2)), 2);
    LatticeAction r3 = make_lattice_action(to_intmat(rot3(2)), 3);
    rep.add("resker-inv-d1-q2", "count.torsion",
            lattice_restriction_kernel_size(inv1, 2).str(), "2");
    rep.add("resker-inv-d1-q6", "count.torsion",
            lattice_restriction_kernel_size(inv1, 6).str(), "2");
    rep.add("resker-inv-d2-q2", "count.torsion",
            lattice_restriction_kernel_size(inv2, 2).str(), "4");
    rep.add("resker-rot3-q3", "count.torsion",
            lattice_restriction_kernel_size(r3, 3).str(), "3");
    rep.add("resker-rot3-q5", "count.torsion",
            lattice_restriction_kernel_size(r3, 5).str(), "1");
  }

  // finite analogues, counted by brute force
  struct FRow {
    std::string name;
    int64_t mod;
    int b;
    Mat64 mat;
    int order;
    int64_t scale;
  };
  std::vector<FRow> frows = {
      {"fin-inv-9sq-c3", 9, 2, neg_identity(2), 2, 3},
      {"fin-inv-27-c3", 27, 1, neg_identity(1), 2, 3},
      {"fin-inv-27-c9", 27, 1, neg_identity(1), 2, 9},
      {"fin-rot3-25sq-c5", 25, 2, rot3(2), 3, 5},
  };
  for (const FRow& fr : frows) {
    GroupPtr g = abelian_group(fr.mod, fr.b);
    ThetaAction act = make_theta_action(g, fr.order, linear_action(fr.mod, fr.mat));
    GroupPtr inner = scaled_sublattice(g, fr.scale);
    FiniteCountingReport fc = verify_counting_formula_finite(act, inner);
    std::ostringstream vals;
    vals << fc.ker_hn << "*" << fc.fixed_index << "=" << fc.quotient_fixed;
    rep.add_bool(fr.name, "count.finite", fc.sequence_ok, vals.str());
  }
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_adem() {
  Report rep;
  rep.suite = "adem";

  struct Row {
    std::string name;
    Mat64 mat;
    int order;
    int64_t p, ell;
    int depth;
    cpp_int h1_order;   // pinned |H^1(Theta, Z^d)|
    cpp_int rhs_r0;     // pinned Adem right-hand side at r = 0
  };
  std::vector<Row> rows = {
      {"inv-rank1", neg_identity(1), 2, 3, 2, 4, 2, 2},
      {"inv-rank2", neg_identity(2), 2, 3, 2, 4, 4, 4},
      {"inv-rank3", neg_identity(3), 2, 3, 2, 3, 8, 8},
      {"swap-rank2", swap01(2), 2, 3, 2, 4, 1, 2},
      {"rot3-rank2", rot3(2), 3, 5, 3, 3, 3, 3},
      {"negpair-rank3", neg_pair(3), 2, 5, 2, 3, 4, 8},
  };
  for (const Row& r : rows) {
    LatticeAction act = make_lattice_action(to_intmat(r.mat), r.order);
    Scenario s = make_scenario(r.name, act, r.p, r.ell, r.depth);

    AbelianStructure h = h1_lattice(act);
    rep.add_bool(r.name + "-h1", "adem.h1", h.finite() && h.order() == r.h1_order,
                 h.str(), big(r.h1_order));
    rep.add_bool(r.name + "-rhs", "adem.rhs", adem_rhs(s, 1, 0) == r.rhs_r0,
                 big(adem_rhs(s, 1, 0)), big(r.rhs_r0));

    bool chain_ok = true;
    for (int n = 1; n <= r.depth; ++n)
      for (int64_t deg : {0, 1}) {
        SmithFloydResult sf = smith_floyd_check(s, n, deg);
        ChainResult ch = chain_inequality(s, n, deg);
        chain_ok = chain_ok && sf.holds && ch.holds;
      }
    ChainResult top = chain_inequality(s, r.depth, 0);
    std::ostringstream vals;
    vals << top.tail_gamma << ">=" << top.adem << ">=" << top.kernel_bound;
    rep.add_bool(r.name + "-chain", "adem.chain", chain_ok, vals.str());

    if (r.name.rfind("inv-", 0) == 0) {
      // full inversion: both sides of the bound equal 2^d at r = 0
      SmithFloydResult eq = smith_floyd_check(s, 1, 0);
      cpp_int twod = cpp_int(1) << act.dim;
      rep.add_bool(r.name + "-equality", "adem.equality",
                   eq.lhs == twod && eq.rhs == twod,
                   eq.lhs.str() + "=" + eq.rhs.str(), twod.str());
    }

    // constant towers: the fit must be flagged degenerate with slope 0,
    // matching the predicted exponent (fixed rank minus lambda vanishes)
    GrowthReport gr = growth_fit(s, 0);
    bool fit_ok = gr.predicted == Rational(0) &&
                  (gr.degenerate ? gr.fitted_exponent == 0.0
                                 : std::abs(gr.fitted_exponent) < 0.05);
    rep.add_bool(r.name + "-growth", "adem.growth", fit_ok,
                 std::to_string(gr.fitted_exponent), gr.predicted.str());
  }

  rep.add_bool("scales-accept", "tower.cofinal",
               valid_cofinal_scales({1, 3, 9, 27}, 3));
  rep.add_bool("scales-skip-level", "tower.cofinal",
               !valid_cofinal_scales({1, 9}, 3));
  rep.add_bool("scales-wrong-ratio", "tower.cofinal",
               !valid_cofinal_scales({1, 3, 6}, 3));
  rep.add_bool("scales-bad-start", "tower.cofinal",
               !valid_cofinal_scales({2, 6}, 3));
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_counterexample() {
  Report rep;
  rep.suite = "counterexample";

  // cyclic shift on F_2^3 and on its sum-zero plane
  FlModule perm3{2, 3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  auto full = cohomology_of_Z_with_module(perm3);
  rep.add_bool("perm-module", "restrict.full", full == std::make_pair(1, 1),
               std::to_string(full.first) + "," + std::to_string(full.second),
               "1,1");

  // shift restricted to the sum-zero plane: t - 1 invertible, H^* = 0
  FlModule szero{2, 2, {{0, 1}, {1, 1}}};
  auto van = cohomology_of_Z_with_module(szero);
  rep.add_bool("sum-zero-vanishing", "restrict.zero",
               van == std::make_pair(0, 0),
               std::to_string(van.first) + "," + std::to_string(van.second),
               "0,0");

  // the generator acts with order 3; cube the action mod 2
  Mat64 t = {{0, 1}, {1, 1}}, cube = {{1, 0}, {0, 1}};
  {
    auto mulm = [](const Mat64& a, const Mat64& b) {
      Mat64 r(2, std::vector<int64_t>(2, 0));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) r[i][j] = (r[i][j] + a[i][k] * b[k][j]) % 2;
      return r;
    };
    Mat64 t3 = mulm(mulm(t, t), t);
    rep.add_bool("action-order-3", "restrict.order", t3 == cube);
  }

  // index-3 subgroup: the generator acts trivially, cohomology reappears
  FlModule sub3{2, 2, {{1, 0}, {0, 1}}};
  auto back = cohomology_of_Z_with_module(sub3);
  rep.add_bool("index-3-subgroup", "restrict.sub",
               back == std::make_pair(2, 2),
               std::to_string(back.first) + "," + std::to_string(back.second),
               "2,2");

  // total mod-2 Betti jumps from 0 to 4 in an index-3 subgroup: no bound
  // of the form b(sub) <= index * b(group) can hold mod ell
  int b_group = van.first + van.second;
  int b_sub = back.first + back.second;
  rep.add_bool("no-multiplicative-bound", "restrict.jump",
               b_sub > 3 * b_group, std::to_string(b_sub) + " > 3*" +
               std::to_string(b_group));
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_exponents() {
  Report rep;
  rep.suite = "exponents";

  // closed-form congruence indices against brute-force group orders
  struct ORow { int n; int64_t p; int k; };
  for (const ORow& r : std::vector<ORow>{{2, 3, 2}, {2, 3, 3}, {2, 5, 2}, {3, 3, 1}}) {
    PrimePower pk = PrimePower::make(r.p, r.k);
    std::vector<Enc> gens;
    for (int i = 0; i < r.n; ++i)
      for (int j = 0; j < r.n; ++j) {
        if (i == j) continue;
        MatZpk e = MatZpk::identity(pk, r.n);
        e.at(i, j) = 1;
        gens.push_back(encode_mat(e));
      }
    GroupPtr g = closure(gens, matrix_mul_rule(pk, r.n),
                         encode_mat(MatZpk::identity(pk, r.n)));
    cpp_int closed = congruence_index("SL", r.n, r.p, r.k);
    std::ostringstream nm;
    nm << "order-SL" << r.n << "(" << r.p << "^" << r.k << ")";
    rep.add_bool(nm.str(), "exp.index", cpp_int(g->size()) == closed,
                 big(cpp_int(g->size())), big(closed));
  }
  rep.add("order-SL2(3)", "exp.index", big(congruence_index("SL", 2, 3, 1)), "24");

  rep.add("exp-half", "exp.main", theorem1_exponent(4, 0, 8, Rational(1)).str(),
          "1/2");
  rep.add("exp-sixth", "exp.main",
          theorem1_exponent(4, 0, 8, Rational(1, 3)).str(), "1/6");

  {
    SplitGroupData sl2 = builtin_group("SL", 2);
    SplitGroupData sp4 = builtin_group("Sp", 4);
    rep.add("basechange-m0", "exp.bc", basechange_exponent(0, sl2).exponent.str(), "1");
    rep.add("basechange-m1", "exp.bc", basechange_exponent(1, sl2).exponent.str(), "1/2");
    rep.add("basechange-start-sl2", "exp.bc",
            basechange_exponent(0, sl2).start_degree.str(), "1");
    rep.add("basechange-m2-sp4", "exp.bc",
            basechange_exponent(2, sp4).exponent.str(), "1/4");
    rep.add("basechange-start-sp4", "exp.bc",
            basechange_exponent(0, sp4).start_degree.str(), "3");
  }

  {
    NumberFieldData q = NumberFieldData::make(1, 0);
    NumberFieldData e2 = NumberFieldData::make(2, 0);
    Sl2nReport r11 = sl2n_example_report(1, 1, q, e2);
    rep.add("sl2n-n1m1-exp", "exp.sl2n", r11.exponent.str(), "1/2");
    rep.add("sl2n-n1m1-start", "exp.sl2n", big(r11.start_degree), "1");
    rep.add("sl2n-n1m1-vcd", "exp.sl2n", big(r11.vcd), "3");

    Sl2nReport r20 = sl2n_example_report(2, 0, q, q);
    rep.add("sl2n-n2m0-exp", "exp.sl2n", r20.exponent.str(), "2/3");
    rep.add("sl2n-n2m0-start", "exp.sl2n", big(r20.start_degree), "3");
    rep.add("sl2n-n2m0-vcd", "exp.sl2n", big(r20.vcd), "6");

    // the closed form equals the general exponent with alpha = 2^{-m}
    bool compose = true;
    for (int n = 1; n <= 5; ++n)
      for (int m = 0; m <= 3; ++m) {
        NumberFieldData em = NumberFieldData::make(1 << m, 0);
        Rational closed = sl2n_example_report(n, m, q, em).exponent;
        Rational general = theorem1_exponent(n * (2 * n + 1), 0, 4 * n * n - 1,
                                             Rational(1, cpp_int(1) << m));
        if (closed != general) compose = false;
      }
    rep.add_bool("sl2n-vs-general", "exp.sl2n", compose, "n<=5, m<=3");

    // halving across each quadratic layer of the tower of fields
    bool halves = true;
    for (int n = 1; n <= 3; ++n) {
      Rational base = sl2n_example_report(n, 0, q, q).exponent;
      for (int m = 1; m <= 2; ++m) {
        NumberFieldData em = NumberFieldData::make(1 << m, 0);
        Rational em_exp = sl2n_example_report(n, m, q, em).exponent;
        cpp_int twom = cpp_int(1) << m;
        if (em_exp * Rational(twom) != base) halves = false;
      }
    }
    rep.add_bool("sl2n-halving", "exp.sl2n", halves);
  }

  {
    NumberFieldData f = NumberFieldData::make(0, 1, {2, 3});  // imaginary quadratic
    SplitGroupData sl2 = builtin_group("SL", 2);
    SplitGroupData sp4 = builtin_group("Sp", 4);
    SplitGroupsResult a = split_groups_exponent(sl2, f, 1, 3);
    rep.add("split-sl2-s1", "exp.split", a.alpha.str(), "1/3");
    rep.add("split-sl2-s1-start", "exp.split", std::to_string(a.start_degree), "0");
    SplitGroupsResult b = split_groups_exponent(sl2, f, 2, 3);
    rep.add("split-sl2-s2", "exp.split", b.alpha.str(), "1/6");
    rep.add("split-sl2-s2-lambda", "exp.split", std::to_string(b.lambda), "1");
    SplitGroupsResult c = split_groups_exponent(sp4, f, 1, 3);
    rep.add("split-sp4-s1", "exp.split", c.alpha.str(), "1/5");

    // alpha equals the general exponent with full alpha = 1 across a sweep
    bool compose = true;
    for (const SplitGroupData& g : {sl2, builtin_group("SL", 3), sp4})
      for (int t = 1; t <= 2; ++t) {
        NumberFieldData fld = NumberFieldData::make(0, t, {2, 3});
        for (int s = 1; s <= fld.degree; ++s) {
          SplitGroupsResult r = split_groups_exponent(g, fld, s, 3);
          Rational general =
              theorem1_exponent(g.rank * fld.degree, g.rank * (s - 1),
                                g.dim * fld.degree, Rational(1));
          if (r.alpha != general) compose = false;
        }
      }
    rep.add_bool("split-vs-general", "exp.split", compose,
                 "SL2,SL3,Sp4 x degrees 2,4");
  }

  rep.add("unit-rank", "exp.units", std::to_string(dirichlet_unit_rank(2, 3)), "4");
  rep.add("frattini-step", "exp.units", std::to_string(frattini_step(1)), "1");
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_lefschetz_signs() {
  Report rep;
  rep.suite = "lefschetz-signs";

  auto sig_str = [](const SignatureResult& s) {
    std::ostringstream os;
    os << "(" << s.n_plus << "," << s.n_minus << "," << s.n_zero << ")";
    return os.str();
  };

  LieAlgebraSC sl2 = builtin_algebra("sl2");
  QuadForm b2 = killing_form(sl2);
  rep.add("sl2-B(e,f)", "sign.killing",
          eval_form(b2, {1, 0, 0}, {0, 0, 1}).str(), "4");
  rep.add("sl2-B(h,h)", "sign.killing",
          eval_form(b2, {0, 1, 0}, {0, 1, 0}).str(), "8");
  SignatureResult s2 = signature(b2);
  rep.add("sl2-signature", "sign.killing", sig_str(s2), "(2,1,0)");
  rep.add("sl2-q", "sign.q", std::to_string(q_from_dim_sign(3, s2.signature())), "2");
  rep.add("sl2-euler-sign", "sign.euler",
          std::to_string(euler_sign(2).sign), "-1");

  {
    LieAlgebraSC so3 = builtin_algebra("so3");
    SignatureResult s = signature(killing_form(so3));
    rep.add("so3-signature", "sign.killing", sig_str(s), "(0,3,0)");
    rep.add("so3-q", "sign.q", std::to_string(q_from_dim_sign(3, s.signature())), "0");
    rep.add("so3-euler-sign", "sign.euler", std::to_string(euler_sign(0).sign), "1");
  }
  for (auto [name, want] : std::vector<std::pair<const char*, const char*>>{
           {"sl3", "(5,3,0)"}, {"sl4", "(9,6,0)"}, {"sp4", "(6,4,0)"},
           {"so4", "(0,6,0)"}, {"so5", "(0,10,0)"}}) {
    LieAlgebraSC g = builtin_algebra(name);
    rep.add(std::string(name) + "-signature", "sign.killing",
            sig_str(signature(killing_form(g))), want);
  }

  // involution of sl3 by conjugation with diag(-1,-1,1)
  {
    LieAlgebraSC sl3 = builtin_algebra("sl3");
    RatMat d = rat_identity(3);
    d[0][0] = -1;
    d[1][1] = -1;
    AlgebraAuto tau = auto_from_conjugation(sl3, d, 2);
    auto fixed = fixed_subalgebra(sl3, tau);
    rep.add("sl3-fixed-dim", "sign.fixed", std::to_string(fixed.size()), "4");
    QuadForm bk = killing_form(sl3);
    CenterDerivedSplit split = derived_center_split(sl3, fixed, bk);
    rep.add("sl3-fixed-center", "sign.split", std::to_string(split.center.size()), "1");
    rep.add("sl3-fixed-derived", "sign.split", std::to_string(split.derived.size()), "3");
    SignatureResult rs = signature(restrict_form(bk, split.derived));
    rep.add("sl3-fixed-signature", "sign.killing", sig_str(rs), "(2,1,0)");
    int q = q_from_dim_sign(3, rs.signature());
    rep.add("sl3-fixed-q", "sign.q", std::to_string(q), "2");
    rep.add("sl3-fixed-euler-sign", "sign.euler",
            std::to_string(euler_sign(q).sign), "-1");
  }

  // involution of sl4 by conjugation with diag(-1,-1,1,1)
  {
    LieAlgebraSC sl4 = builtin_algebra("sl4");
    RatMat d = rat_identity(4);
    d[0][0] = -1;
    d[1][1] = -1;
    AlgebraAuto tau = auto_from_conjugation(sl4, d, 2);
    auto fixed = fixed_subalgebra(sl4, tau);
    rep.add("sl4-fixed-dim", "sign.fixed", std::to_string(fixed.size()), "7");
    QuadForm bk = killing_form(sl4);
    CenterDerivedSplit split = derived_center_split(sl4, fixed, bk);
    rep.add("sl4-fixed-center", "sign.split", std::to_string(split.center.size()), "1");
    rep.add("sl4-fixed-derived", "sign.split", std::to_string(split.derived.size()), "6");
    SignatureResult rs = signature(restrict_form(bk, split.derived));
    rep.add("sl4-fixed-sign-value", "sign.killing",
            std::to_string(rs.signature()), "2");
    int q = q_from_dim_sign(6, rs.signature());
    rep.add("sl4-fixed-q", "sign.q", std::to_string(q), "4");
    rep.add("sl4-fixed-euler-sign", "sign.euler",
            std::to_string(euler_sign(q).sign), "1");
  }

  {
    // semisimple subalgebra: empty center
    LieAlgebraSC so4 = builtin_algebra("so4");
    std::vector<RatVec> all;
    for (int i = 0; i < so4.dim(); ++i) {
      RatVec e(so4.dim(), Rational(0));
      e[i] = 1;
      all.push_back(e);
    }
    CenterDerivedSplit split = derived_center_split(so4, all, killing_form(so4));
    rep.add("so4-center", "sign.split", std::to_string(split.center.size()), "0");
  }

  rep.add_bool("odd-q-vanishing-1", "sign.euler", euler_sign(1).zero);
  rep.add_bool("odd-q-vanishing-3", "sign.euler", euler_sign(3).zero);

  {
    RohlfsSum ok = rohlfs_sum({Rational(-2), Rational(-1, 2), Rational(0)}, -1);
    rep.add_bool("rohlfs-coherent", "sign.rohlfs",
                 ok.coherent && ok.lefschetz == Rational(-5, 2),
                 ok.lefschetz.str(), "-5/2");
    RohlfsSum bad = rohlfs_sum({Rational(-2), Rational(1, 2)}, -1);
    rep.add_bool("rohlfs-incoherent", "sign.rohlfs", !bad.coherent);
  }

  {
    // chi of the level-3 principal congruence subgroup, two ways: scaling
    // chi = -1/6 by the index 12 of its image, and as a free group of rank 3
    Rational via_index = chi_finite_index(Rational(-1, 6), cpp_int(12));
    rep.add("chi-level3", "sign.chi", via_index.str(),
            euler_char(GroupDescriptor::free_group(3)).str());
    Rational via_full = chi_finite_index(Rational(-1, 12),
                                         congruence_index("SL", 2, 3, 1));
    rep.add("chi-level3-full", "sign.chi", via_full.str(), "-2");
  }

  rep.add_bool("mod8-equal", "sign.mod8", mod8_signature_check(1, 9));
  rep.add_bool("mod8-shift", "sign.mod8", mod8_signature_check(-7, 1));
  rep.add_bool("mod8-reject", "sign.mod8", !mod8_signature_check(1, 4));
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"lemma-h1", "prop-uniform", "counting",  "adem",
          "counterexample", "exponents", "lefschetz-signs"};
}

Report run_suite(const std::string& name) {
  if (name == "lemma-h1") return suite_lemma_h1();
  if (name == "prop-uniform") return suite_prop_uniform();
  if (name == "counting") return suite_counting();
  if (name == "adem") return suite_adem();
  if (name == "counterexample") return suite_counterexample();
  if (name == "exponents") return suite_exponents();
  if (name == "lefschetz-signs") return suite_lefschetz_signs();
  throw std::invalid_argument("run_suite: unknown suite " + name);
}

}  // namespace towerlab
