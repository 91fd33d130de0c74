#pragma once

#include "rao/rational.hpp"

#include <cstdint>

namespace rao {

// splitmix64: small, fast, identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform-ish integer in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return next() & 1; }

  // nonzero rational with |num|, |den| <= bound
  Rational rational(long bound) {
    long num = 0;
    while (num == 0) num = range(-bound, bound);
    return Rational(num, range(1, bound));
  }

  // small integer in {-3..3}
  long small() { return range(-3, 3); }

 private:
  std::uint64_t state_;
};

}  // namespace rao
