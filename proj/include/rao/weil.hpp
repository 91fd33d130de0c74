#pragma once

#include "rao/character.hpp"
#include "rao/mu8.hpp"

namespace rao {

// Unnormalized Weil index gamma(psi_a) of x -> psi(a x^2), an eighth root of unity.
// Closed-form case analysis; agrees with weil_index_oracle on every square class.
Mu8 weil_index(const Rational& a, const AdditiveCharacter& psi);

// The same value via the normalized finite Gauss sum
//   (1/sqrt N) sum_{x in p^{-m} Z_p / p^{m'} Z_p} e^{2 pi i {c a x^2}_p},
// refining m until two consecutive levels agree, then snapping to the
// nearest eighth root of unity. Throws if the sum fails to stabilize or the
// snap residual is >= 1e-6.
Mu8 weil_index_oracle(const Rational& a, const AdditiveCharacter& psi);

// Oracle variant returning the snap residual alongside the value.
struct OracleResult {
  Mu8 value;
  double residual;
};
OracleResult weil_index_oracle_checked(const Rational& a, const AdditiveCharacter& psi);

// Normalized Weil index gamma(a, psi) = gamma(psi_a) / gamma(psi), a fourth root of unity.
Mu8 normalized_weil_index(const Rational& a, const AdditiveCharacter& psi);

}  // namespace rao
