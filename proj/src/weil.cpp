#include "rao/weil.hpp"

#include <cmath>
#include <complex>

namespace rao {

Mu8 weil_index(const Rational& a, const AdditiveCharacter& psi) {
  if (a == 0) throw std::domain_error("weil_index of zero");
  const long p = psi.v.p;
  const Rational b = psi.shift * a;
  const long w = val_p(b, p);
  const Rational u = unit_part(b, p);
  if (p == 2) {
    long u8 = unit_mod(u, 8);
    if ((w & 1) == 0) return u8 % 4 == 1 ? Mu8(1) : Mu8(7);
    return Mu8(static_cast<int>(u8));  // gamma(psi_{2u}) = e^{2 pi i u/8}
  }
  if ((w & 1) == 0) return Mu8(0);
  int ls = legendre(Integer(unit_mod(u, p)), p);
  if (p % 4 == 1) return ls == 1 ? Mu8(0) : Mu8(4);
  return ls == 1 ? Mu8(2) : Mu8(6);
}

OracleResult weil_index_oracle_checked(const Rational& a, const AdditiveCharacter& psi) {
  if (a == 0) throw std::domain_error("weil_index_oracle of zero");
  const long p = psi.v.p;
  const Rational b = psi.shift * a;
  const long w = val_p(b, p);
  const Rational u = unit_part(b, p);

  constexpr double kSnapTol = 1e-6;
  constexpr long kTermBudget = 400000000L;  // max lattice size p^N
  const double kPi = std::acos(-1.0);

  int prev_exp = -1;
  double prev_res = 1.0;
  long m = 1;
  while (2 * m - w < 1) ++m;
  for (;; ++m) {
    const long K = 2 * m - w;
    // Sublattice p^{m'} Z_p on whose cosets x -> psi(b x^2) is constant.
    const long mp = std::max<long>({m - w - (p == 2 ? 1 : 0), (-w + 1) / 2, 0});
    const long N = m + mp;

    long pN = 1, pK = 1;
    bool overflow = false;
    for (long i = 0; i < N; ++i) {
      if (pN > kTermBudget / p) { overflow = true; break; }
      pN *= p;
    }
    for (long i = 0; i < K && !overflow; ++i) {
      if (pK > kTermBudget / p) { overflow = true; break; }
      pK *= p;
    }
    if (overflow) throw std::runtime_error("weil_index_oracle: lattice refinement failed to stabilize");

    const long U = static_cast<long>(numerator(u) % pK * inv_mod(denominator(u), pK) % pK + pK) % pK;
    std::complex<double> acc(0.0, 0.0);
    const double step = 2.0 * kPi / static_cast<double>(pK);
    for (long s = 0; s < pN; ++s) {
      long t = static_cast<long>((static_cast<unsigned long long>(U) * ((s * s) % pK)) % pK);
      acc += std::complex<double>(std::cos(step * t), std::sin(step * t));
    }
    double mag = std::abs(acc);
    if (mag < 1e-9 * std::sqrt(static_cast<double>(pN))) {
      prev_exp = -1;  // degenerate level, keep refining
      continue;
    }
    std::complex<double> z = acc / mag;
    double ang = std::arg(z) / (2.0 * kPi) * 8.0;
    int e = static_cast<int>(std::llround(ang)) % 8;
    if (e < 0) e += 8;
    double res = std::abs(z - std::complex<double>(std::cos(2.0 * kPi * e / 8.0),
                                                   std::sin(2.0 * kPi * e / 8.0)));
    if (prev_exp == e && res < kSnapTol && prev_res < kSnapTol)
      return OracleResult{Mu8(e), std::max(res, prev_res)};
    prev_exp = e;
    prev_res = res;
  }
}

Mu8 weil_index_oracle(const Rational& a, const AdditiveCharacter& psi) {
  return weil_index_oracle_checked(a, psi).value;
}

Mu8 normalized_weil_index(const Rational& a, const AdditiveCharacter& psi) {
  return weil_index(a, psi) / weil_index(1, psi);
}

}  // namespace rao
