#include "rao/squares.hpp"

namespace rao {

SquareClass square_class(const Rational& a, const Place& v) {
  if (a == 0) throw std::domain_error("square_class of zero");
  if (!v.finite) return SquareClass{v, a > 0 ? Rational(1) : Rational(-1)};
  long p = v.p;
  long e = val_p(a, p) & 1;
  Rational u = unit_part(a, p);
  Rational rep;
  if (p == 2) {
    switch (unit_mod(u, 8)) {
      case 1: rep = 1; break;
      case 3: rep = -5; break;
      case 5: rep = 5; break;
      default: rep = -1; break;  // 7 mod 8
    }
  } else {
    rep = legendre(Integer(unit_mod(u, p)), p) == 1 ? Rational(1)
                                                    : Rational(smallest_nonresidue(p));
  }
  if (e) rep *= p;
  return SquareClass{v, rep};
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  if (a.v != b.v) throw std::domain_error("square classes at different places");
  return square_class(a.rep * b.rep, a.v);
}

std::vector<Rational> square_class_reps(const Place& v) {
  if (!v.finite) return {1, -1};
  if (v.p == 2) return {1, -1, 5, -5, 2, -2, 10, -10};
  Rational u = smallest_nonresidue(v.p), p = v.p;
  return {1, u, p, u * p};
}

bool is_local_square(const Rational& a, const Place& v) {
  return square_class(a, v).rep == 1;
}

}  // namespace rao
