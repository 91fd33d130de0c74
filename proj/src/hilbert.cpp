#include "rao/hilbert.hpp"

namespace rao {

namespace {
// (x-1)/2 mod 2 and (x^2-1)/8 mod 2 for an odd residue x mod 8.
int eps2(long x) { return ((x - 1) / 2) & 1; }
int omega2(long x) { return ((x * x - 1) / 8) & 1; }
}  // namespace

int hilbert(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert symbol of zero");
  if (!v.finite) return (a < 0 && b < 0) ? -1 : 1;
  long p = v.p;
  long alpha = val_p(a, p), beta = val_p(b, p);
  Rational u = unit_part(a, p), w = unit_part(b, p);
  if (p == 2) {
    long um = unit_mod(u, 8), wm = unit_mod(w, 8);
    int e = eps2(um) * eps2(wm) + static_cast<int>(alpha & 1) * omega2(wm) +
            static_cast<int>(beta & 1) * omega2(um);
    return (e & 1) ? -1 : 1;
  }
  int s = 1;
  if ((alpha & 1) && (beta & 1) && legendre(Integer(p - 1), p) == -1) s = -s;
  if (beta & 1) s *= legendre(Integer(unit_mod(u, p)), p);
  if (alpha & 1) s *= legendre(Integer(unit_mod(w, p)), p);
  return s;
}

}  // namespace rao
