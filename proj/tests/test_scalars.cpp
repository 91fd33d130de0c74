#include "rao/hilbert.hpp"
#include "rao/rng.hpp"
#include "rao/squares.hpp"
#include "rao/weil.hpp"

#include <doctest.h>

using namespace rao;

namespace {

// Independent solvability oracle for (a,b)_p: search the three affine charts
// of z^2 = a x^2 + b y^2 for a primitive zero mod p^K with a Hensel
// certificate (some partial derivative of valuation <= t, K = 2t+1).
int hilbert_solvability_oracle(Rational a, Rational b, long p) {
  // clear square denominators so a, b are integers
  a *= denominator(a) * denominator(a);
  b *= denominator(b) * denominator(b);
  Integer ai = numerator(a), bi = numerator(b);
  long t = (p == 2 ? 1 : 0) + std::max({val_p(a, p), val_p(b, p), 0L});
  long K = 2 * t + 1;
  Integer pK = 1;
  for (long i = 0; i < K; ++i) pK *= p;
  long m = static_cast<long>(pK);
  auto valm = [&](long x) {
    if (x % p != 0) return 0L;
    long v = 0;
    while (x % p == 0 && v < K) { x /= p; ++v; }
    return v;
  };
  long am = static_cast<long>(((ai % pK) + pK) % pK), bm = static_cast<long>(((bi % pK) + pK) % pK);
  auto check = [&](long x, long y, long z) {
    long f = ((z * z % m - am * x % m * x % m - bm * y % m * y % m) % m + 2 * m) % m;
    if (f != 0) return false;
    long dz = valm(2 * z % m), dx = valm(2 * am * x % m), dy = valm(2 * bm * y % m);
    return std::min({dz, dx, dy}) <= t;
  };
  for (long u = 0; u < m; ++u)
    for (long w = 0; w < m; ++w) {
      if (check(1, u, w)) return 1;   // x = 1
      if (check(u, 1, w)) return 1;   // y = 1
      if (check(u, w, 1)) return 1;   // z = 1
    }
  return -1;
}

}  // namespace

TEST_CASE("square classes") {
  CHECK(square_class(4, Place::prime(3)).rep == 1);
  CHECK(square_class(18, Place::prime(3)).rep == 2);  // 18 = 2 * 3^2, 2 nonresidue mod 3
  CHECK(square_class(-1, Place::real()).rep == -1);
  CHECK(square_class(Rational(49, 9), Place::prime(7)).rep == 1);
  CHECK(square_class(Rational(7, 9), Place::prime(7)).rep == 7);
  CHECK(square_class(-7, Place::prime(2)).rep == 1);  // -7 = 1 mod 8
  CHECK(square_class(6, Place::prime(2)).rep == -10); // 6 = 2*3, 3 = -5 mod 8
  CHECK_THROWS_AS(square_class(0, Place::prime(3)), std::domain_error);
}

TEST_CASE("hilbert symbol closed form matches solvability oracle on classes") {
  for (long p : {2L, 3L, 5L}) {
    Place v = Place::prime(p);
    for (const auto& a : square_class_reps(v))
      for (const auto& b : square_class_reps(v)) {
        CAPTURE(p);
        CAPTURE(rat_str(a));
        CAPTURE(rat_str(b));
        CHECK(hilbert(a, b, v) == hilbert_solvability_oracle(a, b, p));
      }
  }
}

TEST_CASE("hilbert examples and laws") {
  CHECK(hilbert(1, Rational(17, 5), Place::prime(7)) == 1);
  CHECK(hilbert(-1, -1, Place::prime(2)) == -1);
  CHECK(hilbert(-1, -1, Place::prime(5)) == 1);
  CHECK(hilbert(-1, -1, Place::real()) == -1);
  CHECK_THROWS_AS(hilbert(0, 1, Place::prime(2)), std::domain_error);

  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    Rational a = rng.rational(300), b = rng.rational(300);
    for (long p : {2L, 3L, 5L}) {
      Place v = Place::prime(p);
      CHECK(hilbert(a, b, v) == hilbert(b, a, v));
      CHECK(hilbert(a, -a, v) == 1);
      if (a != 1) CHECK(hilbert(a, 1 - a, v) == 1);
    }
  }
}

TEST_CASE("weil index closed form equals oracle on every class") {
  for (long p : {2L, 3L, 5L}) {
    Place v = Place::prime(p);
    for (Rational c : {Rational(1), Rational(3), Rational(1, 2)}) {
      AdditiveCharacter psi(v, c);
      for (const auto& a : square_class_reps(v)) {
        CAPTURE(p);
        CAPTURE(rat_str(c));
        CAPTURE(rat_str(a));
        OracleResult oc = weil_index_oracle_checked(a, psi);
        CHECK(oc.residual < 1e-6);
        CHECK(weil_index(a, psi) == oc.value);
      }
    }
  }
}

TEST_CASE("weil index properties") {
  AdditiveCharacter psi5(Place::prime(5)), psi2(Place::prime(2)), psi3(Place::prime(3));
  // scaling invariance
  CHECK(weil_index(3, psi2) == weil_index(3 * 49, psi2));
  CHECK(weil_index(Rational(7, 5), psi5) == weil_index(Rational(7 * 9, 5), psi5));
  // hyperbolic pairs multiply to 1
  for (const auto& psi : {psi2, psi3, psi5})
    for (const auto& a : square_class_reps(psi.v))
      CHECK(weil_index(a, psi) * weil_index(-a, psi) == Mu8(0));
  // gamma(psi_1) at p=5 reproduced by the oracle exactly
  CHECK(weil_index(1, psi5) == weil_index_oracle(1, psi5));
  CHECK_THROWS_AS(weil_index(0, psi5), std::domain_error);
}

TEST_CASE("normalized weil index") {
  for (long p : {2L, 3L, 5L}) {
    Place v = Place::prime(p);
    AdditiveCharacter psi(v, 1);
    CHECK(normalized_weil_index(1, psi) == Mu8(0));
    CHECK(normalized_weil_index(9, psi) == Mu8(0));
    for (const auto& a : square_class_reps(v)) {
      CHECK(normalized_weil_index(a, psi).pow(4) == Mu8(0));
      for (const auto& b : square_class_reps(v)) {
        Mu8 ratio = normalized_weil_index(a, psi) * normalized_weil_index(b, psi) /
                    normalized_weil_index(a * b, psi);
        CHECK(ratio == Mu8::from_sign(hilbert(a, b, v)));
      }
    }
  }
}

TEST_CASE("mu8 arithmetic") {
  CHECK(Mu8(3) * Mu8(7) == Mu8(2));
  CHECK(Mu8(3) / Mu8(7) == Mu8(4));
  CHECK(Mu8(5).pow(-1) == Mu8(3));
  CHECK(Mu8(4).sign() == -1);
  CHECK_THROWS_AS(Mu8(2).sign(), std::domain_error);
}

TEST_CASE("rational helpers") {
  CHECK(rat_str(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(val_p(Rational(9, 2), 3) == 2);
  CHECK(val_p(Rational(9, 2), 2) == -1);
  auto [t, pk] = padic_fraction(Rational(-1, 5), 5);
  CHECK(t == 4);
  CHECK(pk == 5);
  CHECK(smallest_nonresidue(7) == 3);
  CHECK_THROWS_AS(Place::prime(6), std::domain_error);
  CHECK_THROWS_AS(AdditiveCharacter(Place::real(), 1), std::domain_error);
}
