#pragma once

#include "rao/place.hpp"
#include "rao/rational.hpp"

namespace rao {

// psi_c at a finite place: psi_c(x) = psi(c x), where psi is the standard
// level-0 character of Q_p, psi(x) = e^{2 pi i {x}_p}.
struct AdditiveCharacter {
  Place v;
  Rational shift;

  AdditiveCharacter(Place place, Rational c = 1) : v(place), shift(std::move(c)) {
    if (!v.finite) throw std::domain_error("additive character needs a finite place");
    if (shift == 0) throw std::domain_error("character shift must be nonzero");
  }

  AdditiveCharacter shifted(const Rational& c) const {
    return AdditiveCharacter(v, shift * c);
  }
};

}  // namespace rao
