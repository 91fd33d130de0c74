#include "rao/rational.hpp"

namespace rao {

std::string rat_str(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long val_p(const Rational& x, long p) {
  if (x == 0) throw std::domain_error("val_p of zero");
  long v = 0;
  Integer n = numerator(x);
  while (n % p == 0) { n /= p; ++v; }
  Integer d = denominator(x);
  while (d % p == 0) { d /= p; --v; }
  return v;
}

Rational unit_part(const Rational& x, long p) {
  long v = val_p(x, p);
  Rational pw = 1;
  for (long i = 0; i < (v >= 0 ? v : -v); ++i) pw *= p;
  if (v >= 0) return x / pw;
  return x * pw;
}

long unit_mod(const Rational& u, long m) {
  Integer n = numerator(u) % m, d = denominator(u) % m;
  if (n < 0) n += m;
  Integer di = inv_mod(d, m);
  return static_cast<long>((n * di) % m);
}

Integer pow_mod(Integer base, Integer exp, const Integer& mod) {
  Integer r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if ((exp & 1) != 0) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

Integer inv_mod(const Integer& a, const Integer& mod) {
  // extended euclid
  Integer t = 0, nt = 1, r = mod, nr = a % mod;
  if (nr < 0) nr += mod;
  while (nr != 0) {
    Integer q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("not invertible");
  if (t < 0) t += mod;
  return t;
}

int legendre(const Integer& a, long p) {
  Integer r = pow_mod(a, (Integer(p) - 1) / 2, p);
  if (r == 0) throw std::domain_error("legendre: p divides a");
  return r == 1 ? 1 : -1;
}

long smallest_nonresidue(long p) {
  for (long u = 2; u < p; ++u)
    if (legendre(u, p) == -1) return u;
  throw std::logic_error("no nonresidue found");
}

std::pair<Integer, Integer> padic_fraction(const Rational& x, long p) {
  if (x == 0) return {0, 1};
  long v = val_p(x, p);
  if (v >= 0) return {0, 1};
  Integer pk = 1;
  for (long i = 0; i < -v; ++i) pk *= p;
  // x = a / (p^k c), gcd(a, p)=1, gcd(c, p)=1; t = a c^{-1} mod p^k
  Integer a = numerator(x);
  Integer c = denominator(x) / pk;
  Integer t = a % pk * inv_mod(c, pk) % pk;
  if (t < 0) t += pk;
  return {t, pk};
}

std::vector<long> prime_factors(Integer n) {
  if (n == 0) throw std::domain_error("prime_factors of zero");
  if (n < 0) n = -n;
  std::vector<long> out;
  for (long d = 2; Integer(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<long>(n));
  return out;
}

}  // namespace rao
