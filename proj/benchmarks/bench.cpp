// Microbenchmarks for the hot paths: group closure, Smith normal form,
// H^1 class computation, and exact signature diagonalization.

#include <benchmark/benchmark.h>

#include "towerlab/group.hpp"
#include "towerlab/h1.hpp"
#include "towerlab/lie.hpp"
#include "towerlab/modpk.hpp"

using namespace towerlab;

static void BM_CongruenceKernelClosure(benchmark::State& state) {
  int64_t p = state.range(0);
  int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    GroupPtr g = congruence_kernel(MatrixFamily::SL, 2, PrimePower::make(p, k), 1);
    benchmark::DoNotOptimize(g->size());
  }
}
BENCHMARK(BM_CongruenceKernelClosure)->Args({3, 3})->Args({5, 2})->Args({5, 3});

static void BM_SmithNormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMat m(n, n);
  // deterministic dense-ish integer matrix with mixed divisors
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = (i * 7 + j * 3) % 11 - 5;
  for (auto _ : state) {
    SnfResult r = smith_normal_form(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(12)->Arg(20);

static void BM_H1Finite(benchmark::State& state) {
  GroupPtr g = abelian_group(9, 3);
  std::vector<std::vector<int64_t>> inv(3, std::vector<int64_t>(3, 0));
  for (int i = 0; i < 3; ++i) inv[i][i] = -1;
  ThetaAction act = make_theta_action(g, 2, linear_action(9, inv));
  for (auto _ : state) {
    H1Classes h = h1_finite(act);
    benchmark::DoNotOptimize(h.reps.size());
  }
}
BENCHMARK(BM_H1Finite);

static void BM_KillingSignature(benchmark::State& state) {
  LieAlgebraSC g = builtin_algebra("sl4");
  for (auto _ : state) {
    SignatureResult s = signature(killing_form(g));
    benchmark::DoNotOptimize(s.n_plus);
  }
}
BENCHMARK(BM_KillingSignature);

BENCHMARK_MAIN();
