#pragma once

#include <stdexcept>
#include <string>

namespace rao {

// An eighth root of unity e^{2 pi i e/8}, stored by exponent mod 8.
struct Mu8 {
  int e = 0;

  Mu8() = default;
  explicit Mu8(int exp) : e(((exp % 8) + 8) % 8) {}

  static Mu8 one() { return Mu8(0); }
  static Mu8 from_sign(int s) {
    if (s == 1) return Mu8(0);
    if (s == -1) return Mu8(4);
    throw std::domain_error("sign must be +-1");
  }

  Mu8 operator*(Mu8 o) const { return Mu8(e + o.e); }
  Mu8 operator/(Mu8 o) const { return Mu8(e - o.e); }
  Mu8 inverse() const { return Mu8(-e); }
  Mu8 pow(long k) const { return Mu8(static_cast<int>((e * (k % 8)) % 8)); }

  bool operator==(Mu8 o) const { return e == o.e; }
  bool operator!=(Mu8 o) const { return e != o.e; }

  bool is_sign() const { return e == 0 || e == 4; }
  int sign() const {
    if (e == 0) return 1;
    if (e == 4) return -1;
    throw std::domain_error("Mu8 value is not +-1");
  }

  std::string str() const { return std::to_string(e); }
};

}  // namespace rao
