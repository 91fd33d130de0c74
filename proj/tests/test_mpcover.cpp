#include "rao/cocycle.hpp"
#include "rao/hilbert.hpp"
#include "rao/rng.hpp"
#include "rao/weil.hpp"

#include <doctest.h>

using namespace rao;

namespace {
FactoredWord sigma_word(int n, const std::set<int>& S) {
  FactoredWord w(n);
  w.push_sigma(S);
  return w;
}
}  // namespace

TEST_CASE("cocycle word base cases") {
  SympSpace sp(1);
  Place v2 = Place::prime(2), v3 = Place::prime(3);
  CHECK(cocycle_word(sp, sigma_word(1, {1}), sigma_word(1, {1}), v2) == -1);
  CHECK(cocycle_word(sp, sigma_word(1, {1}), sigma_word(1, {1}), v3) == 1);
  CHECK(cocycle_word(sp, FactoredWord(1), sigma_word(1, {1}), v2) == 1);

  // c(word, parabolic) = (x(p), x(word))
  SympSpace sp2(2);
  RatMat d = RatMat::identity(2);
  d(0, 0) = 3;
  FactoredWord w(2);
  w.push_parabolic(sp2, sp_m_levi(sp2, d));
  w.push_sigma({1});
  RatMat u = RatMat::identity(2);
  u(1, 1) = 5;
  FactoredWord pw(2);
  pw.push_parabolic(sp2, sp_m_levi(sp2, u));
  for (long p : {2L, 3L, 5L}) {
    Place v = Place::prime(p);
    int expect = hilbert(5, x_det(sp2, w.product(sp2)), v);
    CHECK(cocycle_word(sp2, w, pw, v) == expect);
    CHECK(cocycle_word(sp2, pw, w, v) == expect);
  }
}

TEST_CASE("cocycle sigma table matches the closed formula") {
  for (int n = 1; n <= 3; ++n) {
    SympSpace sp(n);
    for (long p : {2L, 3L, 5L, 7L}) {
      Place v = Place::prime(p);
      AdditiveCharacter psi(v, 1);
      for (int ms = 0; ms < (1 << n); ++ms)
        for (int mt = 0; mt < (1 << n); ++mt) {
          std::set<int> S, T;
          for (int i = 0; i < n; ++i) {
            if (ms & (1 << i)) S.insert(i + 1);
            if (mt & (1 << i)) T.insert(i + 1);
          }
          int j = 0;
          for (int i : S) j += T.count(i);
          int expect = ((j * (j + 1) / 2) % 2) ? hilbert(-1, -1, v) : 1;
          CAPTURE(n);
          CAPTURE(p);
          CAPTURE(ms);
          CAPTURE(mt);
          CHECK(cocycle_word(sp, sigma_word(n, S), sigma_word(n, T), v) == expect);
          CHECK(cocycle_leray(sp, sp_sigma(sp, S), sp_sigma(sp, T), v, psi) == expect);
        }
    }
  }
}

TEST_CASE("leray backend agrees with word backend on mixed pairs") {
  Rng rng(41);
  int checked = 0;
  while (checked < 300) {
    int n = static_cast<int>(rng.range(1, 3));
    SympSpace sp(n);
    Place v = Place::prime(checked % 2 ? 2 : 3);
    AdditiveCharacter psi(v, rng.coin() ? Rational(1) : Rational(3));
    FactoredWord w1(n), w2(n);
    auto rand_word = [&](FactoredWord& w) {
      std::set<int> S;
      for (int i = 1; i <= n; ++i)
        if (rng.coin()) S.insert(i);
      if (S.empty()) S.insert(1);
      switch (rng.range(0, 2)) {
        case 0: w.push_sigma(S); break;
        case 1:
          w.push_parabolic(sp, sp_a(sp, S));
          w.push_sigma(S);
          break;
        default: {
          RatMat d = RatMat::identity(n);
          for (int i = 0; i < n; ++i) d(i, i) = rng.coin() ? 1 : -1;
          w.push_sigma(S);
          w.push_parabolic(sp, sp_m_levi(sp, d));
          break;
        }
      }
    };
    rand_word(w1);
    rand_word(w2);
    try {
      int cw = cocycle_word(sp, w1, w2, Place::prime(v.p));
      int cl = cocycle_leray(sp, w1.product(sp), w2.product(sp), v, psi);
      CHECK(cw == cl);
      ++checked;
    } catch (const IrreduciblePair&) {
    }
  }
}

TEST_CASE("mp group law") {
  SympSpace sp(2);
  Place v = Place::prime(2);
  SUBCASE("(1,-1) squares to identity") {
    MpElement m{RatMat::identity(4), -1, v, FactoredWord(2)};
    MpElement sq = mp_multiply(sp, m, m);
    CHECK(sq.g.is_identity());
    CHECK(sq.eps == 1);
  }
  SUBCASE("levi pairs reproduce the ML cover") {
    Rng rng(43);
    for (int t = 0; t < 50; ++t) {
      RatMat a = RatMat::identity(2), b = RatMat::identity(2);
      a(0, 0) = rng.range(1, 3);
      a(0, 1) = rng.small();
      a(1, 1) = rng.coin() ? 1 : -1;
      b(0, 0) = rng.coin() ? 1 : 2;
      b(1, 0) = rng.small();
      b(1, 1) = rng.range(1, 3);
      FactoredWord wa(2), wb(2);
      wa.push_parabolic(sp, sp_m_levi(sp, a));
      wb.push_parabolic(sp, sp_m_levi(sp, b));
      MpElement x{sp_m_levi(sp, a), 1, v, wa}, y{sp_m_levi(sp, b), 1, v, wb};
      MpElement prod = mp_multiply(sp, x, y);
      CHECK(prod.g == sp_m_levi(sp, a * b));
      CHECK(prod.eps == hilbert(a.det(), b.det(), v));
      MlElement la{a, 1, v}, lb{b, 1, v};
      CHECK(ml_multiply(la, lb).eps == prod.eps);
    }
  }
  SUBCASE("unipotent splitting") {
    RatMat c(2, 2);
    c(0, 0) = 2;
    c(0, 1) = c(1, 0) = -1;
    RatMat n1 = sp_n_c(sp, 2, c);
    c(0, 0) = 1;
    c(1, 1) = 3;
    RatMat n2 = sp_n_c(sp, 2, c);
    FactoredWord w1(2), w2(2);
    w1.push_parabolic(sp, n1);
    w2.push_parabolic(sp, n2);
    MpElement x{n1, 1, v, w1}, y{n2, 1, v, w2};
    MpElement prod = mp_multiply(sp, x, y, CocycleBackend::kWordOnly);
    CHECK(prod.g == n1 * n2);
    CHECK(prod.eps == 1);
  }
  SUBCASE("inverse") {
    Rng rng(47);
    RatMat d = RatMat::identity(2);
    d(0, 0) = 3;
    d(1, 1) = -2;
    RatMat g = sp_m_levi(sp, d) * sp_sigma(sp, {1});
    MpElement x{g, -1, v, std::nullopt};
    MpElement xi = mp_invert(sp, x);
    MpElement prod = mp_multiply(sp, x, xi);
    CHECK(prod.g.is_identity());
    CHECK(prod.eps == 1);
    MpElement prod2 = mp_multiply(sp, xi, x);
    CHECK(prod2.g.is_identity());
    CHECK(prod2.eps == 1);
    (void)rng;
  }
  SUBCASE("place mismatch is rejected") {
    MpElement x{RatMat::identity(4), 1, Place::prime(2), std::nullopt};
    MpElement y{RatMat::identity(4), 1, Place::prime(3), std::nullopt};
    CHECK_THROWS_AS(mp_multiply(sp, x, y), std::domain_error);
  }
}

TEST_CASE("ml cover") {
  Place v5 = Place::prime(5);
  RatMat one = RatMat::identity(1);
  MlElement e{one, -1, v5};
  CHECK(ml_multiply(e, e).eps == 1);
  RatMat dp = one, du = one;
  dp(0, 0) = 5;
  du(0, 0) = 2;  // 2 is a nonresidue mod 5
  CHECK(ml_multiply(MlElement{dp, 1, v5}, MlElement{du, 1, v5}).eps == -1);
  Rng rng(53);
  for (int t = 0; t < 50; ++t) {
    RatMat a = RatMat::identity(2);
    a(0, 0) = rng.range(1, 5);
    a(0, 1) = rng.small();
    a(1, 1) = rng.coin() ? 2 : 3;
    Place v = Place::prime(t % 2 ? 2 : 3);
    MlElement x{a, 1, v};
    MlElement prod = ml_multiply(x, MlElement{a.inverse(), 1, v});
    CHECK(prod.a.is_identity());
    CHECK(prod.eps == hilbert(a.det(), a.inverse().det(), v));
  }
}

TEST_CASE("lift_word") {
  SympSpace sp(2);
  Place v = Place::prime(2);
  SUBCASE("single letter lifts with sign +1") {
    FactoredWord w(2);
    w.push_sigma({2});
    MpElement x = lift_word(sp, w, v, CocycleBackend::kWordOnly);
    CHECK(x.g == sp_sigma(sp, {2}));
    CHECK(x.eps == 1);
  }
  SUBCASE("v-letter product closed form, n=2 k=2") {
    // lift of v_1 v_2 = (sigma_{1,2}^{2n+1}, (-1,-1)^{k(k-1)/2}), n=k=2
    const int n = 2, k = 2;
    FactoredWord vw(2);
    auto range_set = [](int lo, int hi) {
      std::set<int> s;
      for (int i = lo; i <= hi; ++i) s.insert(i);
      return s;
    };
    for (int i = 1; i <= k; ++i) {
      vw.push_parabolic(sp, sp_a(sp, {i}).pow(n - i + 1) * sp_a(sp, range_set(i + 1, n)));
      vw.push_sigma({i});
    }
    MpElement lifted = lift_word(sp, vw, v, CocycleBackend::kWordOnly);
    RatMat closed = sp_sigma(sp, {1, 2}).pow(2 * n + 1);
    CHECK(lifted.g == closed);
    CHECK(lifted.eps == hilbert(-1, -1, v));  // k(k-1)/2 = 1
  }
  SUBCASE("irreducible propagates in word-only mode") {
    // c(sigma_{1}, m sigma_{1}) with a Levi mixing the sigma block and the
    // rest is outside the rewrite rules
    RatMat a = RatMat::identity(2);
    a(0, 1) = 1;
    FactoredWord w(2);
    w.push_sigma({1});
    w.push_parabolic(sp, sp_m_levi(sp, a));
    w.push_sigma({1});
    CHECK_THROWS_AS(lift_word(sp, w, v, CocycleBackend::kWordOnly), IrreduciblePair);
    // the auto backend falls back to the leray cocycle
    MpElement x = lift_word(sp, w, v);
    CHECK(x.g == w.product(sp));
  }
}

TEST_CASE("word normalization and inverse") {
  SympSpace sp(2);
  Rng rng(59);
  for (int t = 0; t < 40; ++t) {
    FactoredWord w(2);
    for (int l = 0; l < 3; ++l) {
      if (rng.coin()) {
        std::set<int> S;
        for (int i = 1; i <= 2; ++i)
          if (rng.coin()) S.insert(i);
        w.push_sigma(S);
      } else {
        RatMat d = RatMat::identity(2);
        d(0, 0) = rng.coin() ? 1 : -1;
        d(1, 1) = rng.coin() ? 2 : 1;
        w.push_parabolic(sp, sp_m_levi(sp, d));
      }
    }
    RatMat before = w.product(sp);
    FactoredWord nw = w;
    nw.normalize(sp);
    CHECK(nw.product(sp) == before);
    FactoredWord iw = w.inverse(sp);
    CHECK((w.product(sp) * iw.product(sp)).is_identity());
  }
  FactoredWord bad(2);
  CHECK_THROWS_AS(bad.push_sigma({3}), std::domain_error);
  CHECK_THROWS_AS(bad.push_parabolic(sp, sp_sigma(sp, {1})), std::domain_error);
}
