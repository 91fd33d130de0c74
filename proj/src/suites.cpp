#include "rao/suites.hpp"

#include "rao/hilbert.hpp"
#include "rao/orth.hpp"
#include "rao/qform.hpp"
#include "rao/rng.hpp"
#include "rao/weil.hpp"
#include "rao/weyl.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace rao {

namespace {

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

std::string set_str(const std::set<int>& s) {
  std::string out = "{";
  for (int i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

// Summarize a bulk family: one passing record when clean, and every failing
// instance verbatim.
void bulk(VerificationReport& r, const std::string& name, int total,
          const std::vector<std::string>& failures) {
  if (failures.empty()) {
    r.check(name + " [" + std::to_string(total) + " cases]", "all pass", "all pass");
    return;
  }
  for (const auto& f : failures) r.add(CaseRecord{name + ": " + f, "pass", "fail", false});
}

// --- deterministic random elements -------------------------------------------

RatMat random_gl(Rng& rng, int k) {
  RatMat a = RatMat::identity(k);
  for (int step = 0; step < 2 * k + 2; ++step) {
    if (k > 1 && rng.coin()) {
      int i = static_cast<int>(rng.range(0, k - 1));
      int j = static_cast<int>(rng.range(0, k - 1));
      if (i == j) continue;
      Rational c = rng.small();
      for (int t = 0; t < k; ++t) a(i, t) += c * a(j, t);
    } else {
      int i = static_cast<int>(rng.range(0, k - 1));
      Rational d = 0;
      while (d == 0) d = rng.range(-3, 3);
      for (int t = 0; t < k; ++t) a(i, t) *= d;
    }
  }
  return a;
}

std::set<int> random_subset(Rng& rng, int n, bool allow_empty = true) {
  for (;;) {
    std::set<int> s;
    for (int i = 1; i <= n; ++i)
      if (rng.coin()) s.insert(i);
    if (allow_empty || !s.empty()) return s;
  }
}

RatMat random_symmetric(Rng& rng, int k) {
  RatMat c(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) c(i, j) = c(j, i) = rng.small();
  return c;
}

RatMat random_parabolic(const SympSpace& sp, Rng& rng) {
  RatMat g = RatMat::identity(sp.dim());
  int len = static_cast<int>(rng.range(1, 3));
  for (int i = 0; i < len; ++i) {
    switch (rng.range(0, 2)) {
      case 0: g = g * sp_m_levi(sp, random_gl(rng, sp.n)); break;
      case 1: g = g * sp_n_c(sp, sp.n, random_symmetric(rng, sp.n)); break;
      default: g = g * sp_a(sp, random_subset(rng, sp.n)); break;
    }
  }
  return g;
}

// Random word in module generators (entries {-3..3}); exact group membership
// by construction.
RatMat random_sp(const SympSpace& sp, Rng& rng, int max_len) {
  const int n = sp.n;
  RatMat g = RatMat::identity(2 * n);
  int len = static_cast<int>(rng.range(1, max_len));
  for (int i = 0; i < len; ++i) {
    switch (rng.range(0, 5)) {
      case 0: g = g * sp_m_levi(sp, random_gl(rng, n)); break;
      case 1: g = g * sp_n_c(sp, n, random_symmetric(rng, n)); break;
      case 2: g = g * sp_sigma(sp, random_subset(rng, n, false)); break;
      case 3: g = g * sp_a(sp, random_subset(rng, n)); break;
      case 4: g = g * sp_w_y(sp, static_cast<int>(rng.range(1, n))); break;
      default: {
        int k = static_cast<int>(rng.range(1, n));
        if (k == n) {
          g = g * sp_n_c(sp, k, random_symmetric(rng, k));
        } else {
          RatMat b(k, 2 * (n - k));
          for (int r2 = 0; r2 < k; ++r2)
            for (int c2 = 0; c2 < 2 * (n - k); ++c2) b(r2, c2) = rng.small();
          g = g * sp_n_b(sp, k, b);
        }
        break;
      }
    }
  }
  return g;
}

// Random unipotent of a standard parabolic N_k-flag (always Siegel-parabolic).
RatMat random_unipotent(const SympSpace& sp, Rng& rng) {
  const int n = sp.n;
  RatMat g = RatMat::identity(2 * n);
  int k = 0;
  while (k < n) {
    k += static_cast<int>(rng.range(1, n - k));
    if (k < n) {
      RatMat b(k, 2 * (n - k));
      for (int r2 = 0; r2 < k; ++r2)
        for (int c2 = 0; c2 < 2 * (n - k); ++c2) b(r2, c2) = rng.small();
      g = g * sp_n_b(sp, k, b);
    }
    RatMat c(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) c(i, j) = c(j, i) = rng.small();
    g = g * sp_n_c(sp, k, c);
    if (rng.coin()) break;
  }
  return g;
}

// Word shapes whose pairwise cocycles tend to reduce.
FactoredWord random_word(const SympSpace& sp, Rng& rng) {
  FactoredWord w(sp.n);
  auto friendly_parabolic = [&]() -> RatMat {
    switch (rng.range(0, 2)) {
      case 0: return sp_a(sp, random_subset(rng, sp.n));
      case 1: {
        RatMat d = RatMat::identity(sp.n);
        for (int i = 0; i < sp.n; ++i) d(i, i) = rng.coin() ? 1 : -1;
        return sp_m_levi(sp, d);
      }
      default: return random_parabolic(sp, rng);
    }
  };
  switch (rng.range(0, 3)) {
    case 0: w.push_parabolic(sp, friendly_parabolic()); break;
    case 1: w.push_sigma(random_subset(rng, sp.n, false)); break;
    case 2:
      w.push_parabolic(sp, friendly_parabolic());
      w.push_sigma(random_subset(rng, sp.n, false));
      break;
    default:
      w.push_sigma(random_subset(rng, sp.n, false));
      w.push_parabolic(sp, friendly_parabolic());
      break;
  }
  return w;
}

// --- individual suites --------------------------------------------------------

VerificationReport suite_hilbert_laws(const SuiteParams& P) {
  VerificationReport r;
  r.suite = "hilbert-laws";
  r.params = P;
  std::vector<Place> places;
  for (long p : P.primes) places.push_back(Place::prime(p));
  places.push_back(Place::real());

  for (const auto& v : places) {
    auto reps = square_class_reps(v);
    std::vector<std::string> sym, bim;
    for (const auto& a : reps)
      for (const auto& b : reps) {
        if (hilbert(a, b, v) != hilbert(b, a, v))
          sym.push_back("(" + rat_str(a) + "," + rat_str(b) + ")@" + v.str());
        for (const auto& c : reps)
          if (hilbert(a * c, b, v) != hilbert(a, b, v) * hilbert(c, b, v))
            bim.push_back("(" + rat_str(a) + "," + rat_str(c) + ";" + rat_str(b) + ")@" + v.str());
      }
    bulk(r, "symmetry@" + v.str(), static_cast<int>(reps.size() * reps.size()), sym);
    bulk(r, "bimultiplicative@" + v.str(),
         static_cast<int>(reps.size() * reps.size() * reps.size()), bim);
  }

  Rng rng(P.seed ^ 0x68696c62ULL);
  for (const auto& v : places) {
    std::vector<std::string> fails;
    for (int t = 0; t < P.trials; ++t) {
      Rational a = rng.rational(1000);
      if (hilbert(a, -a, v) != 1) fails.push_back("(a,-a) a=" + rat_str(a));
      if (a != 1 && hilbert(a, 1 - a, v) != 1) fails.push_back("(a,1-a) a=" + rat_str(a));
    }
    bulk(r, "norm-relations@" + v.str(), 2 * P.trials, fails);
  }

  {
    std::vector<std::string> fails;
    Rng rng2(P.seed ^ 0x70726f64ULL);
    int count = std::max(P.trials, 1000);
    for (int t = 0; t < count; ++t) {
      Rational a = rng2.rational(1000000), b = rng2.rational(1000000);
      std::set<long> ps = {2};
      for (long p : prime_factors(numerator(a))) ps.insert(p);
      for (long p : prime_factors(denominator(a))) ps.insert(p);
      for (long p : prime_factors(numerator(b))) ps.insert(p);
      for (long p : prime_factors(denominator(b))) ps.insert(p);
      int prod = hilbert(a, b, Place::real());
      for (long p : ps) prod *= hilbert(a, b, Place::prime(p));
      if (prod != 1) fails.push_back("a=" + rat_str(a) + " b=" + rat_str(b));
    }
    bulk(r, "product-formula", count, fails);
  }

  // square_class postconditions on random inputs
  {
    Rng rng3(P.seed ^ 0x7371636cULL);
    std::vector<std::string> fails;
    for (const auto& v : places)
      for (int t = 0; t < P.trials / 5; ++t) {
        Rational a = rng3.rational(1000);
        SquareClass c = square_class(a, v);
        bool in_set = false;
        for (const auto& rep : square_class_reps(v)) in_set |= (rep == c.rep);
        if (!in_set || !is_local_square(a / c.rep, v))
          fails.push_back("a=" + rat_str(a) + "@" + v.str());
      }
    bulk(r, "square-class-canonical", static_cast<int>(places.size()) * (P.trials / 5), fails);
  }
  return r;
}

VerificationReport suite_weil_oracle(const SuiteParams& P) {
  VerificationReport r;
  r.suite = "weil-oracle";
  r.params = P;
  for (long p : P.primes) {
    Place v = Place::prime(p);
    AdditiveCharacter psi(v, 1);
    for (const auto& a : square_class_reps(v)) {
      OracleResult oc = weil_index_oracle_checked(a, psi);
      r.check("closed=oracle a=" + rat_str(a) + "@" + std::to_string(p), oc.value.str(),
              weil_index(a, psi).str());
      r.check("snap-residual a=" + rat_str(a) + "@" + std::to_string(p), "<1e-6",
              oc.residual < 1e-6 ? "<1e-6" : std::to_string(oc.residual));
    }
    // gamma(a)gamma(b)/gamma(ab) = (a,b)
    std::vector<std::string> fails;
    auto reps = square_class_reps(v);
    for (const auto& a : reps)
      for (const auto& b : reps) {
        Mu8 lhs = normalized_weil_index(a, psi) * normalized_weil_index(b, psi) /
                  normalized_weil_index(a * b, psi);
        if (lhs != Mu8::from_sign(hilbert(a, b, v)))
          fails.push_back("a=" + rat_str(a) + " b=" + rat_str(b) + "@" + std::to_string(p));
      }
    bulk(r, "gamma-hilbert-relation@" + std::to_string(p),
         static_cast<int>(reps.size() * reps.size()), fails);

    // invariance under squares and the class function property
    Rng rng(P.seed ^ 0x7765696cULL ^ static_cast<std::uint64_t>(p));
    std::vector<std::string> inv;
    for (int t = 0; t < P.trials / 5; ++t) {
      Rational a = rng.rational(50);
      Rational s = rng.rational(20);
      if (weil_index(a, psi) != weil_index(a * s * s, psi))
        inv.push_back("a=" + rat_str(a) + " t=" + rat_str(s));
      if (weil_index(a, psi) != weil_index(square_class(a, v).rep, psi))
        inv.push_back("class a=" + rat_str(a));
      if ((normalized_weil_index(a, psi).pow(4)) != Mu8(0))
        inv.push_back("fourth-power a=" + rat_str(a));
      Rational c = rng.rational(10);
      if (weil_index(a, AdditiveCharacter(v, c)) != weil_index_oracle(a, AdditiveCharacter(v, c)))
        inv.push_back("shifted a=" + rat_str(a) + " c=" + rat_str(c));
    }
    bulk(r, "weil-invariances@" + std::to_string(p), 4 * (P.trials / 5), inv);

    // hyperbolic pair identity via the oracle
    for (const auto& a : reps) {
      Mu8 prod = weil_index_oracle(a, psi) * weil_index_oracle(-a, psi);
      r.check("hyperbolic-pair a=" + rat_str(a) + "@" + std::to_string(p), "0", prod.str());
    }
  }

  // gamma(psi o q_{V^eps}) = eps(V) gamma(psi), n <= 3
  for (long p : P.primes) {
    Place v = Place::prime(p);
    AdditiveCharacter psi(v, 1);
    for (int n = 0; n <= 3; ++n)
      for (int eps : {1, -1}) {
        if (eps == -1 && n == 0) continue;
        OrthSpace V = orth_space(n, eps, v);
        Mu8 expect = weil_index(1, psi) * (eps == 1 ? Mu8(0) : Mu8(4));
        r.check("gamma(qV) n=" + std::to_string(n) + " eps=" + sign_str(eps) + "@" +
                    std::to_string(p),
                expect.str(), weil_index_form(V.form(), psi).str());
        r.check("disc(V) n=" + std::to_string(n) + " eps=" + sign_str(eps) + "@" +
                    std::to_string(p),
                "1/1", disc_normalized(V, v).str());
        r.check("iso-dim n=" + std::to_string(n) + " eps=" + sign_str(eps) + "@" +
                    std::to_string(p),
                std::to_string(n - (1 - eps) / 2), std::to_string(max_isotropic_dim(V)));
        if (eps == -1) {
          OrthSpace Vp = orth_space(n, 1, v);
          r.check("V-/V+ distinct n=" + std::to_string(n) + "@" + std::to_string(p), "false",
                  witt_equivalent(V.form(), Vp.form(), v) ? "true" : "false");
        }
      }
  }

  // diagonalization independence of weil_index_form and invariants
  {
    Rng rng(P.seed ^ 0x64696167ULL);
    std::vector<std::string> fails;
    int count = std::min(P.trials, 200);
    for (int t = 0; t < count; ++t) {
      int dim = static_cast<int>(rng.range(1, 6));
      RatMat g(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) g(i, j) = g(j, i) = rng.small();
      QuadForm q(g);
      // change basis by a random unimodular congruence
      RatMat u = random_gl(rng, dim);
      QuadForm qq(u.transpose() * g * u);
      for (long p : P.primes) {
        Place v = Place::prime(p);
        auto i1 = invariants(q, v), i2 = invariants(qq, v);
        if (i1.rank != i2.rank || !(i1.disc == i2.disc) || i1.hasse != i2.hasse)
          fails.push_back("invariants t=" + std::to_string(t) + "@" + std::to_string(p));
        if (i1.rank == dim) {
          AdditiveCharacter psi(v, 1);
          if (weil_index_form(q, psi) != weil_index_form(qq, psi))
            fails.push_back("gamma t=" + std::to_string(t) + "@" + std::to_string(p));
          if (!witt_equivalent(q, qq, v))
            fails.push_back("witt t=" + std::to_string(t) + "@" + std::to_string(p));
        }
      }
    }
    bulk(r, "basis-independence", count, fails);
  }
  return r;
}

VerificationReport suite_bruhat(const SuiteParams& P) {
  VerificationReport r;
  r.suite = "bruhat";
  r.params = P;
  Rng rng(P.seed ^ 0x62727568ULL);

  // generator sanity across ranks
  {
    std::vector<std::string> fails;
    int count = 0;
    for (int n = 1; n <= P.n_max; ++n) {
      SympSpace sp(n);
      for (int t = 0; t < 10; ++t) {
        RatMat gens[] = {sp_m_levi(sp, random_gl(rng, n)),
                         sp_n_c(sp, n, random_symmetric(rng, n)),
                         sp_sigma(sp, random_subset(rng, n)), sp_a(sp, random_subset(rng, n)),
                         sp_w_y(sp, static_cast<int>(rng.range(1, n)))};
        for (const auto& g : gens) {
          ++count;
          if (!is_symplectic(sp, g)) fails.push_back("generator n=" + std::to_string(n));
        }
        if (n >= 2) {
          int k = static_cast<int>(rng.range(1, n - 1));
          RatMat b(k, 2 * (n - k));
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < 2 * (n - k); ++j) b(i, j) = rng.small();
          ++count;
          if (!is_symplectic(sp, sp_n_b(sp, k, b)))
            fails.push_back("n_b n=" + std::to_string(n));
        }
      }
    }
    bulk(r, "generators-symplectic", count, fails);
  }

  // fixed examples
  {
    SympSpace sp1(1);
    BruhatForm b = bruhat_decompose(sp1, sp_sigma(sp1, {1}));
    r.check("sigma decomposes as (1,S,1)",
            "S={1} p1=1 p2=1",
            "S=" + set_str(b.S) + " p1=" + (b.p1.is_identity() ? "1" : "p") +
                " p2=" + (b.p2.is_identity() ? "1" : "p"));
    RatMat wy = sp_w_y(sp1, 1);
    r.check("x(w_Y) at n=1 is class -1", square_class(-1, Place::prime(3)).str(),
            x_function(sp1, wy, Place::prime(3)).str());
    SympSpace sp2(2);
    r.check("x(w_Y) at n=2 is class 1", "1/1",
            x_function(sp2, sp_w_y(sp2, 2), Place::prime(3)).str());
    r.check("x(sigma_S) trivial", "1/1",
            x_function(sp2, sp_sigma(sp2, {1, 2}), Place::prime(5)).str());
    RatMat a = random_gl(rng, 2);
    r.check("x(m_n(a)) = det a", square_class(a.det(), Place::prime(5)).str(),
            x_function(sp2, sp_m_levi(sp2, a), Place::prime(5)).str());
  }

  // reconstruction on random words
  {
    std::vector<std::string> fails;
    int count = std::max(P.trials, 1000);
    for (int t = 0; t < count; ++t) {
      int n = static_cast<int>(rng.range(1, P.n_max));
      SympSpace sp(n);
      RatMat g = random_sp(sp, rng, 8);
      BruhatForm b = bruhat_decompose(sp, g);
      if (b.p1 * sp_sigma(sp, b.S) * b.p2 != g) fails.push_back("t=" + std::to_string(t));
      if (!in_siegel_parabolic(sp, b.p1) || !in_siegel_parabolic(sp, b.p2))
        fails.push_back("parabolic t=" + std::to_string(t));
      if (static_cast<int>(b.S.size()) != g.block(n, 0, n, n).rank())
        fails.push_back("rank t=" + std::to_string(t));
    }
    bulk(r, "reconstruction", count, fails);
  }

  // x-function invariance under parabolic multiplication
  {
    std::vector<std::string> fails;
    int count = 200;
    for (int t = 0; t < count; ++t) {
      int n = static_cast<int>(rng.range(1, P.n_max));
      SympSpace sp(n);
      RatMat g = random_sp(sp, rng, 6);
      RatMat p = random_parabolic(sp, rng), q = random_parabolic(sp, rng);
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      SquareClass lhs = x_function(sp, p * g * q, v);
      SquareClass rhs = square_class(det_on_y(sp, p) * x_det(sp, g) * det_on_y(sp, q), v);
      if (!(lhs == rhs)) fails.push_back("t=" + std::to_string(t));
    }
    bulk(r, "x-invariance", count, fails);
  }
  return r;
}

VerificationReport suite_cocycle_table(const SuiteParams& P) {
  VerificationReport r;
  r.suite = "cocycle-table";
  r.params = P;
  std::vector<long> primes = P.primes;
  for (int n = 1; n <= P.n_max_exhaustive; ++n) {
    SympSpace sp(n);
    std::vector<std::set<int>> subsets;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::set<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.insert(i + 1);
      subsets.push_back(s);
    }
    for (long p : primes) {
      Place v = Place::prime(p);
      AdditiveCharacter psi(v, 1);
      std::vector<std::string> word_fails, leray_fails;
      for (const auto& S : subsets)
        for (const auto& T : subsets) {
          int j = 0;
          for (int i : S) j += T.count(i);
          int expect = ((j * (j + 1) / 2) % 2) ? hilbert(-1, -1, v) : 1;
          FactoredWord w1(n), w2(n);
          w1.push_sigma(S);
          w2.push_sigma(T);
          RatMat g1 = sp_sigma(sp, S), g2 = sp_sigma(sp, T);
          if (cocycle_word(sp, w1, w2, v) != expect)
            word_fails.push_back("S=" + set_str(S) + " T=" + set_str(T));
          if (cocycle_leray(sp, g1, g2, v, psi) != expect)
            leray_fails.push_back("S=" + set_str(S) + " T=" + set_str(T));
        }
      bulk(r, "word-backend n=" + std::to_string(n) + "@" + std::to_string(p),
           static_cast<int>(subsets.size() * subsets.size()), word_fails);
      bulk(r, "leray-backend n=" + std::to_string(n) + "@" + std::to_string(p),
           static_cast<int>(subsets.size() * subsets.size()), leray_fails);
    }
  }
  // psi-independence of the leray backend
  {
    Rng rng(P.seed ^ 0x70736931ULL);
    std::vector<std::string> fails;
    int count = std::min(P.trials, 100);
    for (int t = 0; t < count; ++t) {
      int n = static_cast<int>(rng.range(1, P.n_max_exhaustive));
      SympSpace sp(n);
      RatMat g1 = random_sp(sp, rng, 5), g2 = random_sp(sp, rng, 5);
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      int c1 = cocycle_leray(sp, g1, g2, v, AdditiveCharacter(v, 1));
      int c2 = cocycle_leray(sp, g1, g2, v, AdditiveCharacter(v, rng.rational(8)));
      if (c1 != c2) fails.push_back("t=" + std::to_string(t));
    }
    bulk(r, "leray-psi-independent", count, fails);
  }
  return r;
}

VerificationReport suite_proof_chain(const SuiteParams& P) {
  VerificationReport r;
  r.suite = "proof-chain";
  r.params = P;
  for (int n = 1; n <= P.n_max; ++n) {
    SympSpace sp(n);
    // omega_i = exp(X_a) exp(-X_{-a}) exp(X_a)
    std::vector<RatMat> omega;
    for (int i = 1; i <= n; ++i) omega.push_back(sp_reflection_rep(sp, i));

    auto range_set = [](int lo, int hi) {
      std::set<int> s;
      for (int i = lo; i <= hi; ++i) s.insert(i);
      return s;
    };

    // v_i = omega_i ... omega_n ... omega_i = a_{i+1..n} sigma_i^{2(n-i-1)+1}
    std::vector<RatMat> vmat(n + 1);
    for (int i = 1; i <= n; ++i) {
      RatMat m = RatMat::identity(2 * n);
      for (int j = i; j <= n; ++j) m = m * omega[j - 1];
      for (int j = n - 1; j >= i; --j) m = m * omega[j - 1];
      vmat[i] = m;
      RatMat closed =
          sp_a(sp, range_set(i + 1, n)) * sp_sigma(sp, {i}).pow(2 * (n - i - 1) + 1);
      r.check("v-closed-form n=" + std::to_string(n) + " i=" + std::to_string(i),
              "equal", m == closed ? "equal" : "different");
    }

    for (int k = 1; k <= P.k_cap(n); ++k) {
      // z_j = omega_{k-1}^{-1} ... omega_j^{-1} = m_n(iota(kappa))
      std::vector<RatMat> zmat(std::max(k, 1));
      for (int j = 1; j <= k - 1; ++j) {
        RatMat m = RatMat::identity(2 * n);
        for (int t = k - 1; t >= j; --t) m = m * omega[t - 1].inverse();
        zmat[j] = m;
        RatMat closed = sp_m_levi(sp, gl_iota(j - 1, k - j + 1, n - k, gl_kappa(k - j + 1)));
        r.check("z-closed-form n=" + std::to_string(n) + " k=" + std::to_string(k) +
                    " j=" + std::to_string(j),
                "equal", m == closed ? "equal" : "different");
      }
      // v_i z_j = z_j v_i for i < j <= k-1
      for (int i = 1; i <= k - 1; ++i)
        for (int j = i + 1; j <= k - 1; ++j)
          r.check("vz-commute n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" +
                      std::to_string(i) + " j=" + std::to_string(j),
                  "equal", vmat[i] * zmat[j] == zmat[j] * vmat[i] ? "equal" : "different");

      // suffix closed form v_{i+1} ... v_k = sigma_{i+1..k} p'_{i+1}
      auto pprime = [&](int i) {
        return sp_a(sp, range_set(i, k)).pow(n - i + 1) *
               sp_a(sp, range_set(k + 1, n)).pow(k - i + 1);
      };
      for (int i = 1; i <= k; ++i) {
        RatMat suffix = RatMat::identity(2 * n);
        for (int t = i; t <= k; ++t) suffix = suffix * vmat[t];
        RatMat closed = sp_sigma(sp, range_set(i, k)) * pprime(i);
        r.check("v-suffix-closed n=" + std::to_string(n) + " k=" + std::to_string(k) +
                    " i=" + std::to_string(i),
                "equal", suffix == closed ? "equal" : "different");
      }

      for (long p : P.primes) {
        Place v = Place::prime(p);
        // c(v_i, v_{i+1} ... v_k) = (-1,-1)^{k+i}
        for (int i = 1; i <= k - 1; ++i) {
          FactoredWord w1(n), w2(n);
          w1.push_parabolic(sp, sp_a(sp, {i}).pow(n - i + 1) * sp_a(sp, range_set(i + 1, n)));
          w1.push_sigma({i});
          w2.push_sigma(range_set(i + 1, k));
          w2.push_parabolic(sp, pprime(i + 1));
          int expect = ((k + i) % 2) ? hilbert(-1, -1, v) : 1;
          std::string got;
          try {
            got = sign_str(cocycle_word(sp, w1, w2, v));
          } catch (const IrreduciblePair& e) {
            got = std::string("irreducible: ") + e.what();
          }
          r.check("c(v_i, suffix) n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" +
                      std::to_string(i) + "@" + std::to_string(p),
                  sign_str(expect), got);
        }

        // lifted products, word backend only; an irreducible pair is a
        // case failure, not a crash
        try {
          MpElement zprod = mp_identity(sp, v);
          for (int j = 1; j <= k - 1; ++j) {
            FactoredWord wz(n);
            wz.push_parabolic(sp, zmat[j]);
            zprod = mp_multiply(sp, zprod, MpElement{zmat[j], 1, v, wz},
                                CocycleBackend::kWordOnly);
          }
          RatMat zclosed = sp_m_levi(
              sp, gl_iota(0, k, n - k, gl_j(k, n).scaled((n + k) % 2 ? -1 : 1)));
          r.check("z-product n=" + std::to_string(n) + " k=" + std::to_string(k) + "@" +
                      std::to_string(p),
                  "matrix,+1",
                  (zprod.g == zclosed ? "matrix," : "wrong,") + sign_str(zprod.eps));

          MpElement vprod = mp_identity(sp, v);
          for (int i = 1; i <= k; ++i) {
            FactoredWord wv(n);
            wv.push_parabolic(sp, sp_a(sp, {i}).pow(n - i + 1) * sp_a(sp, range_set(i + 1, n)));
            wv.push_sigma({i});
            vprod = mp_multiply(sp, vprod, MpElement{vmat[i], 1, v, wv},
                                CocycleBackend::kWordOnly);
          }
          RatMat vclosed = sp_sigma(sp, range_set(1, k)).pow(2 * n + 1) *
                           sp_a(sp, range_set(k + 1, n)).pow(k);
          int vsign = ((k * (k - 1) / 2) % 2) ? hilbert(-1, -1, v) : 1;
          r.check("v-product n=" + std::to_string(n) + " k=" + std::to_string(k) + "@" +
                      std::to_string(p),
                  "matrix," + sign_str(vsign),
                  (vprod.g == vclosed ? "matrix," : "wrong,") + sign_str(vprod.eps));

          // full element z-product * v-product = w'_M, still word backend
          MpElement whole = mp_multiply(sp, zprod, vprod, CocycleBackend::kWordOnly);
          MpElement target = target_representative_sp(sp, k, v);
          r.check("regrouped-route w~P n=" + std::to_string(n) + " k=" + std::to_string(k) + "@" +
                      std::to_string(p),
                  "matrix," + sign_str(target.eps),
                  (whole.g == target.g ? "matrix," : "wrong,") + sign_str(whole.eps));
        } catch (const IrreduciblePair& e) {
          r.add(CaseRecord{"lifted-products n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               "@" + std::to_string(p),
                           "reducible", std::string("irreducible: ") + e.what(), false});
        }
      }
    }
  }
  return r;
}

VerificationReport suite_prop_ls_sp(const SuiteParams& P) {
  VerificationReport r;
  r.suite = "prop-ls-sp";
  r.params = P;
  for (int n = 1; n <= P.n_max; ++n) {
    SympSpace sp(n);
    for (int k = 1; k <= P.k_cap(n); ++k) {
      ReducedWord w = wM_word(n, k);
      SignedPerm perm = word_to_perm(n, w);
      r.check("word-reduced n=" + std::to_string(n) + " k=" + std::to_string(k),
              std::to_string(w.size()), std::to_string(coxeter_length(perm)));
      for (long p : P.primes) {
        Place v = Place::prime(p);
        MpElement ls = ls_representative_sp(sp, w, v);
        MpElement target = target_representative_sp(sp, k, v);
        r.check("w~P=w'M n=" + std::to_string(n) + " k=" + std::to_string(k) + "@" +
                    std::to_string(p),
                "matrix," + sign_str(target.eps),
                (ls.g == target.g ? "matrix," : "wrong,") + sign_str(ls.eps));
      }
    }
  }
  return r;
}

VerificationReport suite_prop_ls_so(const SuiteParams& P) {
  VerificationReport r;
  r.suite = "prop-ls-so";
  r.params = P;
  Rng rng(P.seed ^ 0x736f736fULL);
  for (int n = 1; n <= P.n_max; ++n) {
    OrthSpace V = orth_space(n, 1);
    std::vector<std::string> gen_fails;
    int gcount = 0;
    for (int k = 1; k <= n; ++k) {
      RatMat wx = so_w_x(V, k);
      ++gcount;
      if (!in_so(V, wx)) gen_fails.push_back("w_X k=" + std::to_string(k));
      RatMat a = random_gl(rng, k);
      ++gcount;
      if (!in_so(V, so_l(V, k, a))) gen_fails.push_back("l(a) k=" + std::to_string(k));
      RatMat c(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          c(i, j) = rng.small();
          c(j, i) = -c(i, j);
        }
      ++gcount;
      if (!in_so(V, so_u_c(V, k, c))) gen_fails.push_back("u_c k=" + std::to_string(k));
      if (k < n) {
        RatMat b(k, 2 * (n - k) + 1);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < 2 * (n - k) + 1; ++j) b(i, j) = rng.small();
        ++gcount;
        if (!in_so(V, so_u_b(V, k, b))) gen_fails.push_back("u_b k=" + std::to_string(k));
      }
    }
    bulk(r, "so-generators n=" + std::to_string(n), gcount, gen_fails);

    for (int k = 1; k <= P.k_cap(n); ++k) {
      RatMat ls = ls_representative_so(n, wM_word(n, k));
      RatMat target = target_representative_so(n, k);
      r.check("w~Q=w'L n=" + std::to_string(n) + " k=" + std::to_string(k), "equal",
              ls == target ? "equal" : "different");
      r.check("w'L in SO n=" + std::to_string(n) + " k=" + std::to_string(k), "true",
              in_so(V, target) ? "true" : "false");
    }
  }
  return r;
}

VerificationReport suite_levi_cover(const SuiteParams& P) {
  VerificationReport r;
  r.suite = "levi-cover";
  r.params = P;
  Rng rng(P.seed ^ 0x6c657669ULL);

  // (1,-1) is central of order 2
  {
    SympSpace sp(2);
    Place v = Place::prime(2);
    MpElement minus{RatMat::identity(4), -1, v, FactoredWord(2)};
    MpElement sq = mp_multiply(sp, minus, minus);
    r.check("(1,-1)^2 = (1,+1)", "identity,+1",
            (sq.g.is_identity() ? "identity," : "wrong,") + sign_str(sq.eps));
    RatMat g = random_sp(sp, rng, 4);
    MpElement x{g, 1, v, std::nullopt};
    MpElement a = mp_multiply(sp, minus, x), b = mp_multiply(sp, x, minus);
    r.check("(1,-1) central", "equal",
            (a.g == b.g && a.eps == b.eps) ? "equal" : "different");
  }

  // ML_k law and examples
  {
    Place v5 = Place::prime(5);
    RatMat dp = RatMat::identity(1), du = RatMat::identity(1);
    dp(0, 0) = 5;
    du(0, 0) = smallest_nonresidue(5);
    MlElement a{dp, 1, v5}, b{du, 1, v5};
    MlElement ab = ml_multiply(a, b);
    r.check("ml (diag p)(diag u) sign", "-1", sign_str(ab.eps));
    MlElement one{RatMat::identity(1), -1, v5};
    r.check("ml (1,-1)^2", "+1", sign_str(ml_multiply(one, one).eps));
    std::vector<std::string> fails;
    for (int t = 0; t < P.trials; ++t) {
      int k = static_cast<int>(rng.range(1, 3));
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      MlElement x{random_gl(rng, k), rng.coin() ? 1 : -1, v};
      MlElement xi{x.a.inverse(), 1, v};
      MlElement prod = ml_multiply(x, xi);
      if (!prod.a.is_identity() ||
          prod.eps != x.eps * hilbert(x.a.det(), x.a.inverse().det(), v))
        fails.push_back("t=" + std::to_string(t));
    }
    bulk(r, "ml-inverse-law", P.trials, fails);
  }

  // Levi restriction: c(m_n(iota(a)), m_n(iota(a'))) = (det a, det a')
  {
    std::vector<std::string> fails;
    for (int t = 0; t < P.trials; ++t) {
      int n = static_cast<int>(rng.range(1, P.n_max));
      int k = static_cast<int>(rng.range(1, n));
      SympSpace sp(n);
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      RatMat a = random_gl(rng, k), b = random_gl(rng, k);
      RatMat ma = sp_m_levi(sp, gl_iota(0, k, n - k, a));
      RatMat mb = sp_m_levi(sp, gl_iota(0, k, n - k, b));
      FactoredWord wa(n), wb(n);
      wa.push_parabolic(sp, ma);
      wb.push_parabolic(sp, mb);
      int expect = hilbert(a.det(), b.det(), v);
      if (cocycle_word(sp, wa, wb, v) != expect) {
        fails.push_back("word t=" + std::to_string(t));
        continue;
      }
      MpElement xa{ma, 1, v, wa}, xb{mb, 1, v, wb};
      MpElement prod = mp_multiply(sp, xa, xb);
      if (prod.eps != expect || prod.g != ma * mb) fails.push_back("mp t=" + std::to_string(t));
      MlElement la{a, 1, v}, lb{b, 1, v};
      if (ml_multiply(la, lb).eps != expect) fails.push_back("ml t=" + std::to_string(t));
    }
    bulk(r, "levi-restriction", P.trials, fails);
  }

  // unipotent splitting: n -> (n, 1) is a homomorphism
  {
    std::vector<std::string> fails;
    for (int t = 0; t < P.trials; ++t) {
      int n = static_cast<int>(rng.range(2, std::max(2, P.n_max)));
      SympSpace sp(n);
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      RatMat u1 = random_unipotent(sp, rng), u2 = random_unipotent(sp, rng);
      FactoredWord w1(n), w2(n);
      w1.push_parabolic(sp, u1);
      w2.push_parabolic(sp, u2);
      MpElement x{u1, 1, v, w1}, y{u2, 1, v, w2};
      MpElement prod = mp_multiply(sp, x, y);
      if (prod.eps != 1 || prod.g != u1 * u2) fails.push_back("t=" + std::to_string(t));
    }
    bulk(r, "unipotent-splitting", P.trials, fails);
  }
  return r;
}

VerificationReport suite_mp_associativity(const SuiteParams& P) {
  VerificationReport r;
  r.suite = "mp-associativity";
  r.params = P;
  Rng rng(P.seed ^ 0x636f6379ULL);

  // normalization c(1, g) = c(g, 1) = 1
  {
    std::vector<std::string> fails;
    for (int t = 0; t < 100; ++t) {
      int n = static_cast<int>(rng.range(1, P.n_max));
      SympSpace sp(n);
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      RatMat g = random_sp(sp, rng, 5);
      FactoredWord word = random_word(sp, rng);
      if (cocycle_word(sp, FactoredWord(n), word, v) != 1 ||
          cocycle_word(sp, word, FactoredWord(n), v) != 1)
        fails.push_back("word t=" + std::to_string(t));
      AdditiveCharacter psi(v, 1);
      if (cocycle_leray(sp, RatMat::identity(2 * n), g, v, psi) != 1 ||
          cocycle_leray(sp, g, RatMat::identity(2 * n), v, psi) != 1)
        fails.push_back("leray t=" + std::to_string(t));
    }
    bulk(r, "normalization", 100, fails);
  }

  // 2-cocycle identity on reducible word triples
  {
    std::vector<std::string> fails;
    int found = 0, attempts = 0;
    const int want = P.trials;
    while (found < want && attempts < 60 * want) {
      ++attempts;
      int n = static_cast<int>(rng.range(1, P.n_max));
      SympSpace sp(n);
      Place v = Place::prime(P.primes[attempts % P.primes.size()]);
      FactoredWord w1 = random_word(sp, rng), w2 = random_word(sp, rng),
                   w3 = random_word(sp, rng);
      try {
        int c12 = cocycle_word(sp, w1, w2, v);
        FactoredWord w12 = w1;
        w12.append(sp, w2);
        int c12_3 = cocycle_word(sp, w12, w3, v);
        int c23 = cocycle_word(sp, w2, w3, v);
        FactoredWord w23 = w2;
        w23.append(sp, w3);
        int c1_23 = cocycle_word(sp, w1, w23, v);
        ++found;
        if (c12 * c12_3 != c23 * c1_23) fails.push_back("attempt=" + std::to_string(attempts));
      } catch (const IrreduciblePair&) {
        continue;
      }
    }
    if (found < want)
      fails.push_back("only " + std::to_string(found) + " reducible triples found");
    bulk(r, "word-cocycle-identity", want, fails);
  }

  // cross-backend agreement on reducible pairs
  {
    std::vector<std::string> fails;
    int found = 0, attempts = 0;
    const int want = P.trials;
    while (found < want && attempts < 60 * want) {
      ++attempts;
      int n = static_cast<int>(rng.range(1, P.n_max));
      SympSpace sp(n);
      Place v = Place::prime(P.primes[attempts % P.primes.size()]);
      FactoredWord w1 = random_word(sp, rng), w2 = random_word(sp, rng);
      try {
        int cw = cocycle_word(sp, w1, w2, v);
        ++found;
        int cl = cocycle_leray(sp, w1.product(sp), w2.product(sp), v, AdditiveCharacter(v, 1));
        if (cw != cl) fails.push_back("attempt=" + std::to_string(attempts));
      } catch (const IrreduciblePair&) {
        continue;
      }
    }
    if (found < want)
      fails.push_back("only " + std::to_string(found) + " reducible pairs found");
    bulk(r, "cross-backend-pairs", want, fails);
  }

  // leray backend: cocycle identity on arbitrary triples
  {
    std::vector<std::string> fails;
    for (int t = 0; t < P.trials; ++t) {
      int n = static_cast<int>(rng.range(1, P.n_max));
      SympSpace sp(n);
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      AdditiveCharacter psi(v, 1);
      RatMat g1 = random_sp(sp, rng, 5), g2 = random_sp(sp, rng, 5), g3 = random_sp(sp, rng, 5);
      int lhs = cocycle_leray(sp, g1, g2, v, psi) * cocycle_leray(sp, g1 * g2, g3, v, psi);
      int rhs = cocycle_leray(sp, g2, g3, v, psi) * cocycle_leray(sp, g1, g2 * g3, v, psi);
      if (lhs != rhs) fails.push_back("t=" + std::to_string(t));
    }
    bulk(r, "leray-cocycle-identity", P.trials, fails);
  }

  // symmetry on commuting pairs (tori and a_S elements)
  {
    std::vector<std::string> fails;
    int count = std::min(P.trials, 200);
    for (int t = 0; t < count; ++t) {
      int n = static_cast<int>(rng.range(1, P.n_max));
      SympSpace sp(n);
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      AdditiveCharacter psi(v, 1);
      RatMat d1 = RatMat::identity(n), d2 = RatMat::identity(n);
      for (int i = 0; i < n; ++i) {
        Rational x = 0;
        while (x == 0) x = rng.range(-3, 3);
        d1(i, i) = x;
        x = 0;
        while (x == 0) x = rng.range(-3, 3);
        d2(i, i) = x;
      }
      RatMat t1 = sp_m_levi(sp, d1), t2 = sp_m_levi(sp, d2);
      RatMat s = sp_sigma(sp, random_subset(rng, n, false));
      RatMat g1 = rng.coin() ? t1 : s * t1 * s.inverse();
      RatMat g2 = rng.coin() ? t2 : sp_a(sp, random_subset(rng, n));
      if (g1 * g2 == g2 * g1) {
        if (cocycle_leray(sp, g1, g2, v, psi) != cocycle_leray(sp, g2, g1, v, psi))
          fails.push_back("leray t=" + std::to_string(t));
        // word backend on the same pair when both orders reduce
        FactoredWord w1(n), w2(n);
        try {
          w1.push_parabolic(sp, g1);
        } catch (const std::domain_error&) {
          BruhatForm b = bruhat_decompose(sp, g1);
          if (!b.p1.is_identity()) w1.push_parabolic(sp, b.p1);
          if (!b.S.empty()) w1.push_sigma(b.S);
          if (!b.p2.is_identity()) w1.push_parabolic(sp, b.p2);
        }
        w2.push_parabolic(sp, g2);
        try {
          if (cocycle_word(sp, w1, w2, v) != cocycle_word(sp, w2, w1, v))
            fails.push_back("word t=" + std::to_string(t));
        } catch (const IrreduciblePair&) {
        }
      }
    }
    bulk(r, "commuting-symmetry", count, fails);
  }

  // mp_invert and associativity of lifted products
  {
    std::vector<std::string> fails;
    int count = std::min(P.trials, 200);
    for (int t = 0; t < count; ++t) {
      int n = static_cast<int>(rng.range(1, P.n_max));
      SympSpace sp(n);
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      MpElement x{random_sp(sp, rng, 4), rng.coin() ? 1 : -1, v, std::nullopt};
      MpElement y{random_sp(sp, rng, 4), rng.coin() ? 1 : -1, v, std::nullopt};
      MpElement z{random_sp(sp, rng, 4), rng.coin() ? 1 : -1, v, std::nullopt};
      MpElement a = mp_multiply(sp, mp_multiply(sp, x, y), z);
      MpElement b = mp_multiply(sp, x, mp_multiply(sp, y, z));
      if (a.g != b.g || a.eps != b.eps) fails.push_back("assoc t=" + std::to_string(t));
      MpElement xi = mp_invert(sp, x);
      MpElement prod = mp_multiply(sp, x, xi);
      if (!prod.g.is_identity() || prod.eps != 1)
        fails.push_back("inverse t=" + std::to_string(t));
    }
    bulk(r, "mp-group-laws", 2 * count, fails);
  }

  // lift_word on single letters and small words
  {
    std::vector<std::string> fails;
    int count = std::min(P.trials, 100);
    for (int t = 0; t < count; ++t) {
      int n = static_cast<int>(rng.range(1, P.n_max));
      SympSpace sp(n);
      Place v = Place::prime(P.primes[t % P.primes.size()]);
      FactoredWord w = random_word(sp, rng);
      MpElement lifted = lift_word(sp, w, v);
      if (lifted.g != w.product(sp)) fails.push_back("t=" + std::to_string(t));
    }
    bulk(r, "lift-word-product", count, fails);
  }
  return r;
}

using SuiteFn = VerificationReport (*)(const SuiteParams&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"hilbert-laws", suite_hilbert_laws},
      {"weil-oracle", suite_weil_oracle},
      {"bruhat", suite_bruhat},
      {"cocycle-table", suite_cocycle_table},
      {"proof-chain", suite_proof_chain},
      {"prop-ls-sp", suite_prop_ls_sp},
      {"prop-ls-so", suite_prop_ls_so},
      {"levi-cover", suite_levi_cover},
      {"mp-associativity", suite_mp_associativity},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, fn] : suite_table()) out.push_back(k);
    return out;
  }();
  return names;
}

std::vector<std::string> suite_coverage(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> cov = {
      {"hilbert-laws", {"scalars/square_class", "scalars/hilbert"}},
      {"weil-oracle",
       {"scalars/weil_index", "scalars/weil_index_oracle", "scalars/normalized_weil_index",
        "qforms/diagonalize", "qforms/invariants", "qforms/witt_equivalent",
        "qforms/weil_index_form", "soodd/orth_space", "soodd/max_isotropic_dim"}},
      {"bruhat", {"spgroup/generator", "spgroup/bruhat_decompose", "spgroup/x_function"}},
      {"cocycle-table",
       {"mpcover/cocycle_word", "mpcover/cocycle_leray", "qforms/kashiwara_form"}},
      {"proof-chain",
       {"mpcover/cocycle_word", "mpcover/mp_multiply", "weylreps/exp_nilpotent",
        "weylreps/root_vector", "spgroup/generator", "weylreps/target_representative"}},
      {"prop-ls-sp",
       {"weylreps/wM_word", "weylreps/ls_representative", "weylreps/target_representative",
        "mpcover/lift_word", "mpcover/mp_multiply"}},
      {"prop-ls-so",
       {"weylreps/ls_representative", "weylreps/target_representative", "soodd/so_generator",
        "soodd/orth_space"}},
      {"levi-cover", {"mpcover/ml_multiply", "mpcover/mp_multiply", "mpcover/cocycle_word"}},
      {"mp-associativity",
       {"mpcover/mp_multiply", "mpcover/mp_invert", "mpcover/cocycle_word",
        "mpcover/cocycle_leray", "mpcover/lift_word"}},
  };
  auto it = cov.find(name);
  if (it == cov.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second;
}

const std::vector<std::string>& all_operations() {
  static const std::vector<std::string> ops = {
      "scalars/square_class",        "scalars/hilbert",
      "scalars/weil_index_oracle",   "scalars/weil_index",
      "scalars/normalized_weil_index",
      "qforms/diagonalize",          "qforms/invariants",
      "qforms/witt_equivalent",      "qforms/weil_index_form",
      "qforms/kashiwara_form",       "spgroup/generator",
      "spgroup/bruhat_decompose",    "spgroup/x_function",
      "mpcover/cocycle_word",        "mpcover/cocycle_leray",
      "mpcover/mp_multiply",         "mpcover/mp_invert",
      "mpcover/lift_word",           "mpcover/ml_multiply",
      "weylreps/wM_word",            "weylreps/root_vector",
      "weylreps/exp_nilpotent",      "weylreps/ls_representative",
      "weylreps/target_representative",
      "soodd/orth_space",            "soodd/so_generator",
      "soodd/max_isotropic_dim",
  };
  return ops;
}

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
  params.validate();
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport out;
  if (name == "all") {
    out.suite = "all";
    out.params = params;
    for (const auto& [k, fn] : suite_table()) out.merge(fn(params));
  } else {
    auto it = suite_table().find(name);
    if (it == suite_table().end()) throw std::invalid_argument("unknown suite: " + name);
    out = it->second(params);
  }
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace rao
