// Acceptance gate: runs every headline verification once, prints one
// pass/fail line per criterion, and exits nonzero if any of them fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "towerlab/h1.hpp"
#include "towerlab/suites.hpp"

namespace {

int g_failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0 && secs > budget_seconds) ok = false;
  if (!ok) ++g_failures;
  std::printf("[%s] %-32s (%.2fs%s)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              secs, budget_seconds > 0 ? ", budgeted" : "", err.empty() ? "" : " error: ",
              err.c_str());
}

bool suite_passes(const std::string& name) {
  towerlab::Report r = towerlab::run_suite(name);
  if (!r.all_pass()) std::fputs(r.text().c_str(), stderr);
  return r.all_pass();
}

bool oracle_equivalence() {
  auto corpus = oracle::finite_order_corpus(100);
  if (corpus.size() < 100) return false;
  for (const auto& [mat, order] : corpus) {
    towerlab::AbelianStructure h = towerlab::h1_lattice(
        towerlab::make_lattice_action(towerlab::IntMat::from_rows(mat), order));
    std::vector<long long> expected = oracle::h1_invariant_factors(mat, order);
    if (h.free_rank != 0 || h.torsion.size() != expected.size()) return false;
    for (size_t i = 0; i < expected.size(); ++i)
      if (h.torsion[i] != expected[i]) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion("cyclic-h1-triviality", 60, [] { return suite_passes("lemma-h1"); });
  criterion("uniform-series-fixed-points", 120, [] { return suite_passes("prop-uniform"); });
  criterion("tower-counting-identity", 0, [] { return suite_passes("counting"); });
  criterion("adem-smith-floyd-chain", 0, [] { return suite_passes("adem"); });
  criterion("infinite-group-counterexample", 0, [] { return suite_passes("counterexample"); });
  criterion("growth-exponents", 0, [] { return suite_passes("exponents"); });
  criterion("lefschetz-sign-calculus", 10, [] { return suite_passes("lefschetz-signs"); });
  criterion("lattice-h1-oracle-equivalence", 0, oracle_equivalence);

  std::printf("%d/8 acceptance criteria passed\n", 8 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
