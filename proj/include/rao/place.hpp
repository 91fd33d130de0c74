#pragma once

#include "rao/rational.hpp"

#include <string>

namespace rao {

// A place of Q: the real place or a finite prime.
struct Place {
  bool finite = true;
  long p = 2;

  static Place real() { return Place{false, 0}; }
  static Place prime(long p) {
    if (!is_prime(p)) throw std::domain_error("not a prime: " + std::to_string(p));
    return Place{true, p};
  }

  bool operator==(const Place& o) const { return finite == o.finite && (!finite || p == o.p); }
  bool operator!=(const Place& o) const { return !(*this == o); }

  std::string str() const { return finite ? std::to_string(p) : std::string("real"); }
};

inline Place parse_place(const std::string& s) {
  if (s == "real" || s == "inf") return Place::real();
  return Place::prime(std::stol(s));
}

}  // namespace rao
