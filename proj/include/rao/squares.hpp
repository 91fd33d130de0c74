#pragma once

#include "rao/place.hpp"
#include "rao/rational.hpp"

#include <vector>

namespace rao {

// An element of Q_v^x / (Q_v^x)^2, held by its canonical representative:
//   p odd:  {1, u, p, up}, u the smallest positive nonresidue mod p
//   p = 2:  {1, -1, 5, -5, 2, -2, 10, -10}
//   real:   {1, -1}
struct SquareClass {
  Place v;
  Rational rep;

  bool operator==(const SquareClass& o) const { return v == o.v && rep == o.rep; }
  bool operator!=(const SquareClass& o) const { return !(*this == o); }
  std::string str() const { return rat_str(rep); }
};

SquareClass square_class(const Rational& a, const Place& v);

// Product in the square-class group (canonicalized).
SquareClass operator*(const SquareClass& a, const SquareClass& b);

// All canonical representatives at v.
std::vector<Rational> square_class_reps(const Place& v);

bool is_local_square(const Rational& a, const Place& v);

}  // namespace rao
