#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rao {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "num/den" form, den > 0, reduced. parse accepts "3" as "3/1".
std::string rat_str(const Rational& x);
Rational parse_rational(const std::string& s);

bool is_prime(long p);

// p-adic valuation of a nonzero rational.
long val_p(const Rational& x, long p);

// x / p^{val_p(x)}; numerator and denominator both prime to p.
Rational unit_part(const Rational& x, long p);

// For a rational u with p-free denominator and numerator (a p-unit),
// the residue num * den^{-1} mod m where m is a power of p.
long unit_mod(const Rational& u, long m);

// Legendre symbol (a/p) for odd prime p, p not dividing a.
int legendre(const Integer& a, long p);

long smallest_nonresidue(long p);

Integer pow_mod(Integer base, Integer exp, const Integer& mod);
Integer inv_mod(const Integer& a, const Integer& mod);

// p-adic fractional part {x}_p = t / p^k with 0 <= t < p^k, x - t/p^k p-integral.
// Returns {t, p^k}.
std::pair<Integer, Integer> padic_fraction(const Rational& x, long p);

// Distinct prime factors of |n| by trial division (n != 0).
std::vector<long> prime_factors(Integer n);

}  // namespace rao
