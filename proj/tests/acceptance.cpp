// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.

#include "rao/suites.hpp"

#include <chrono>
#include <cstdio>
#include <string>

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool pass, double seconds, double budget) {
  bool in_budget = budget <= 0 || seconds <= budget;
  if (!pass || !in_budget) ++g_failures;
  std::printf("[%s] criterion %d: %s (%.1f s%s)\n", pass && in_budget ? "PASS" : "FAIL", idx,
              what.c_str(), seconds, budget > 0 && !in_budget ? ", over budget" : "");
  std::fflush(stdout);
}

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  using rao::run_suite;
  using rao::SuiteParams;

  SuiteParams base;
  base.n_max = 4;
  base.n_max_exhaustive = 3;
  base.primes = {2, 3, 5};
  base.trials = 500;
  base.seed = 0;

  // 1. w~P = w'M: n <= 4, k <= n, p in {2,3,5}; exact matrix and sign; <= 60 s
  {
    bool pass = false;
    double s = timed([&] { pass = run_suite("prop-ls-sp", base).pass; });
    report(1, "LS representative equals w'_M on Mp (exact, incl. epsilon^LS)", pass, s, 60);
  }

  // 2. w~Q = w'L: same ranges, exact matrix equality; <= 10 s
  {
    bool pass = false;
    double s = timed([&] { pass = run_suite("prop-ls-so", base).pass; });
    report(2, "LS representative equals w'_L on SO (exact)", pass, s, 10);
  }

  // 3. cocycle table c(sigma_S, sigma_T) = (-1,-1)^{j(j+1)/2}, n <= 3,
  //    p in {2,3,5,7}; exact; <= 30 s
  {
    SuiteParams p = base;
    p.primes = {2, 3, 5, 7};
    bool pass = false;
    double s = timed([&] { pass = run_suite("cocycle-table", p).pass; });
    report(3, "exhaustive sigma cocycle table at p in {2,3,5,7}", pass, s, 30);
  }

  // 4. proof chain identities, exact for n <= 4, k <= n
  {
    bool pass = false;
    double s = timed([&] { pass = run_suite("proof-chain", base).pass; });
    report(4, "v_i/z_j closed forms, commutation, partial cocycles, lifted products", pass, s, 0);
  }

  // 5. Hilbert laws: exhaustive symmetry/bimultiplicativity and the product
  //    formula on 1000 seeded pairs; exact
  {
    SuiteParams p = base;
    p.trials = 1000;
    bool pass = false;
    double s = timed([&] { pass = run_suite("hilbert-laws", p).pass; });
    report(5, "Hilbert symbol laws and the product formula (1000 pairs)", pass, s, 0);
  }

  // 6. Weil index closed form vs Gauss-sum oracle; gamma relations;
  //    gamma(psi o q_V) = eps(V) gamma(psi) for n <= 3; exact after snap
  {
    bool pass = false;
    double s = timed([&] { pass = run_suite("weil-oracle", base).pass; });
    report(6, "Weil indices: oracle agreement, Hilbert relation, eps(V) identity", pass, s, 0);
  }

  // 7. Bruhat: reconstruction on 1000 seeded elements, x invariance on 200
  {
    SuiteParams p = base;
    p.trials = 1000;
    bool pass = false;
    double s = timed([&] { pass = run_suite("bruhat", p).pass; });
    report(7, "Bruhat reconstruction (1000 words) and x-function invariance (200)", pass, s, 0);
  }

  // 8. cover laws: cocycle identity on 500 reducible triples, Levi restriction
  //    and unipotent splitting on 500 pairs, central (1,-1), cross-backend
  {
    bool pass = false;
    double s = timed([&] {
      pass = run_suite("levi-cover", base).pass && run_suite("mp-associativity", base).pass;
    });
    report(8, "cover laws: cocycle identity, Levi restriction, unipotent splitting", pass, s, 0);
  }

  // 9. determinism: two runs of suite 'all' with seed 0 at the default
  //    parameters are byte-identical
  {
    bool pass = false;
    double s = timed([&] {
      std::string a = rao::render_json(run_suite("all", base));
      std::string b = rao::render_json(run_suite("all", base));
      pass = !a.empty() && a == b;
    });
    report(9, "verify --suite all --seed 0 --json is byte-identical across runs", pass, s, 0);
  }

  if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
  return g_failures ? 1 : 0;
}
