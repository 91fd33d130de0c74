#include "rao/hilbert.hpp"
#include "rao/weyl.hpp"

#include <doctest.h>

using namespace rao;

TEST_CASE("signed permutations and words") {
  CHECK(wM_word(1, 1) == ReducedWord{1});
  CHECK(wM_word(2, 1) == ReducedWord{1, 2, 1});
  CHECK(wM_word(2, 2) == ReducedWord{2, 1, 2});
  CHECK_THROWS_AS(wM_word(2, 3), std::domain_error);

  // reduced: word length equals the inversion count of its product
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      ReducedWord w = wM_word(n, k);
      CHECK(static_cast<int>(w.size()) == coxeter_length(word_to_perm(n, w)));
    }

  // the product maps positive roots inside the Levi to positive roots:
  // e_i - e_j for i < j <= k stays positive, and the Sp(W_{n-k}) block roots
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      SignedPerm w = word_to_perm(n, wM_word(n, k));
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          // image of e_i - e_j
          CHECK(w.sign[i] == w.sign[j]);
          CHECK(((w.perm[i] < w.perm[j]) == (w.sign[i] == 1)));
        }
      for (int i = k; i < n; ++i) {
        CHECK(w.sign[i] == 1);
        CHECK(w.perm[i] >= k);
      }
    }
}

TEST_CASE("root vectors") {
  SympSpace sp1(1);
  RootVector a1 = root_vector_sp(sp1, 1, true);
  CHECK(a1.mat(0, 1) == 1);
  CHECK(a1.mat(0, 0) == 0);
  CHECK(a1.mat(1, 0) == 0);
  CHECK(a1.mat(1, 1) == 0);

  // coroot bracket [X, X_-] = H with [H, X] = 2X
  for (int n = 1; n <= 3; ++n) {
    SympSpace sp(n);
    for (int i = 1; i <= n; ++i) {
      RatMat xp = root_vector_sp(sp, i, true).mat;
      RatMat xm = root_vector_sp(sp, i, false).mat;
      RatMat h = xp * xm - xm * xp;
      CHECK(h * xp - xp * h == xp.scaled(2));
      CHECK(h * xm - xm * h == xm.scaled(-2));
      // root vectors live in sp: X^T Omega + Omega X = 0
      CHECK((xp.transpose() * sp.gram() + sp.gram() * xp).is_zero());
      CHECK((xm.transpose() * sp.gram() + sp.gram() * xm).is_zero());
    }
    for (int i = 1; i <= n; ++i) {
      RatMat xp = root_vector_so(n, i, true).mat;
      RatMat xm = root_vector_so(n, i, false).mat;
      RatMat h = xp * xm - xm * xp;
      CHECK(h * xp - xp * h == xp.scaled(2));
      CHECK(h * xm - xm * h == xm.scaled(-2));
    }
  }

  // n=1 examples: [X, X_-] = diag(1, -1); SO X_{beta_1} table entry
  SympSpace s1(1);
  RatMat xp = root_vector_sp(s1, 1, true).mat, xm = root_vector_sp(s1, 1, false).mat;
  RatMat h = xp * xm - xm * xp;
  CHECK(h(0, 0) == 1);
  CHECK(h(1, 1) == -1);
  RatMat b1 = root_vector_so(1, 1, true).mat;  // basis (x_1, x_0, x*_1)
  CHECK(b1(0, 1) == 2);   // x_0 -> 2 x_1
  CHECK(b1(1, 2) == -1);  // x*_1 -> -x_0
}

TEST_CASE("exp of nilpotents") {
  SympSpace sp1(1);
  CHECK(exp_nilpotent(RatMat(2, 2)).is_identity());
  RatMat e = exp_nilpotent(root_vector_sp(sp1, 1, true).mat);
  CHECK(e(0, 0) == 1);
  CHECK(e(0, 1) == 1);
  CHECK(e(1, 0) == 0);
  CHECK(e(1, 1) == 1);
  RatMat eb = exp_nilpotent(root_vector_so(1, 1, true).mat);
  CHECK(eb(0, 1) == 2);
  CHECK(eb(0, 2) == -1);
  CHECK(eb(1, 2) == -1);
  CHECK(eb(2, 2) == 1);
  CHECK_THROWS_AS(exp_nilpotent(RatMat::identity(2)), std::domain_error);
  // exp(X)^{-1} = exp(-X)
  for (int i = 1; i <= 3; ++i) {
    SympSpace sp(3);
    RatMat x = root_vector_sp(sp, i, true).mat;
    CHECK((exp_nilpotent(x) * exp_nilpotent(x.scaled(-1))).is_identity());
  }
}

TEST_CASE("ls representatives") {
  SympSpace sp1(1);
  Place v = Place::prime(3);
  SUBCASE("empty word is the identity") {
    MpElement e = ls_representative_sp(sp1, {}, v);
    CHECK(e.g.is_identity());
    CHECK(e.eps == 1);
    CHECK(ls_representative_so(2, {}).is_identity());
  }
  SUBCASE("n=1 word [1]") {
    MpElement x = ls_representative_sp(sp1, {1}, v);
    CHECK(x.eps == 1);
    CHECK(x.g(0, 0) == 0);
    CHECK(x.g(0, 1) == 1);
    CHECK(x.g(1, 0) == -1);
    CHECK(x.g(1, 1) == 0);
  }
  SUBCASE("distinct reduced words of one element agree") {
    // commuting, short-braid, and long-braid relations in ranks 2 and 3
    struct Pair {
      int n;
      ReducedWord a, b;
    };
    std::vector<Pair> pairs = {
        {2, {1, 2, 1, 2}, {2, 1, 2, 1}},        // (s1 s2)^2 = (s2 s1)^2 in C_2
        {3, {1, 3}, {3, 1}},                    // disjoint supports commute
        {3, {1, 2, 1}, {2, 1, 2}},              // type-A braid
        {3, {2, 3, 2, 3}, {3, 2, 3, 2}},        // type-C braid at the long root
        {3, {1, 2, 1, 3, 2, 3, 2, 3}, {2, 1, 2, 3, 2, 3, 2, 3}},
    };
    for (const auto& pr : pairs) {
      CAPTURE(pr.n);
      REQUIRE(word_to_perm(pr.n, pr.a) == word_to_perm(pr.n, pr.b));
      SympSpace spn(pr.n);
      for (long p : {2L, 3L, 5L}) {
        Place vp = Place::prime(p);
        MpElement x = ls_representative_sp(spn, pr.a, vp);
        MpElement y = ls_representative_sp(spn, pr.b, vp);
        CHECK(x.g == y.g);
        CHECK(x.eps == y.eps);
      }
      CHECK(ls_representative_so(pr.n, pr.a) == ls_representative_so(pr.n, pr.b));
    }
  }
}

TEST_CASE("target representatives") {
  Place v = Place::prime(3);
  SUBCASE("Mp, n=1, k=1") {
    SympSpace sp1(1);
    MpElement t = target_representative_sp(sp1, 1, v);
    CHECK(t.eps == 1);
    CHECK(t.g(0, 1) == 1);
    CHECK(t.g(1, 0) == -1);
  }
  SUBCASE("epsilon^LS at p=2") {
    SympSpace sp2(2);
    CHECK(target_representative_sp(sp2, 2, Place::prime(2)).eps == -1);
    CHECK(target_representative_sp(sp2, 2, Place::prime(5)).eps == 1);
    SympSpace sp4(4);
    // k = 4: k(k-1)/2 = 6 even
    CHECK(target_representative_sp(sp4, 4, Place::prime(2)).eps == 1);
  }
  SUBCASE("SO, n=1, k=1") {
    RatMat t = target_representative_so(1, 1);
    CHECK(t(0, 2) == -1);
    CHECK(t(1, 1) == -1);
    CHECK(t(2, 0) == -1);
    CHECK(t(0, 0) == 0);
  }
}

TEST_CASE("ls representative equals the explicit target at small rank") {
  for (int n = 1; n <= 2; ++n) {
    SympSpace sp(n);
    for (int k = 1; k <= n; ++k)
      for (long p : {2L, 3L}) {
        Place v = Place::prime(p);
        MpElement ls = ls_representative_sp(sp, wM_word(n, k), v);
        MpElement target = target_representative_sp(sp, k, v);
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(p);
        CHECK(ls.g == target.g);
        CHECK(ls.eps == target.eps);
        CHECK(ls_representative_so(n, wM_word(n, k)) == target_representative_so(n, k));
      }
  }
}
