#pragma once

#include "rao/place.hpp"
#include "rao/rational.hpp"

namespace rao {

// Quadratic Hilbert symbol (a,b)_v: +1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution over Q_v. Symmetric and bimultiplicative on square classes.
int hilbert(const Rational& a, const Rational& b, const Place& v);

}  // namespace rao
