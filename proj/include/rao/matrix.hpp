#pragma once

#include "rao/rational.hpp"

#include <vector>

namespace rao {

// Small dense matrix over Q, exact arithmetic throughout.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool operator==(const RatMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  RatMat operator*(const RatMat& o) const {
    if (c_ != o.r_) throw std::domain_error("matrix shape mismatch");
    RatMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const Rational& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.c_; ++j) out(i, j) += x * o(k, j);
      }
    return out;
  }

  RatMat operator+(const RatMat& o) const {
    RatMat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
  }

  RatMat operator-(const RatMat& o) const {
    RatMat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
  }

  RatMat operator-() const { return scaled(-1); }

  RatMat scaled(const Rational& s) const {
    RatMat out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
  }

  RatMat transpose() const {
    RatMat out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (r_ != c_) return false;
    return *this == identity(r_);
  }

  Rational det() const {
    if (r_ != c_) throw std::domain_error("det of non-square");
    RatMat m = *this;
    Rational d = 1;
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (m(i, col) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      if (piv != col) {
        for (int j = 0; j < c_; ++j) std::swap(m(piv, j), m(col, j));
        d = -d;
      }
      d *= m(col, col);
      Rational inv = Rational(1) / m(col, col);
      for (int i = col + 1; i < r_; ++i) {
        if (m(i, col) == 0) continue;
        Rational f = m(i, col) * inv;
        for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return d;
  }

  RatMat inverse() const {
    if (r_ != c_) throw std::domain_error("inverse of non-square");
    RatMat m = *this, inv = identity(r_);
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (m(i, col) != 0) { piv = i; break; }
      if (piv < 0) throw std::domain_error("singular matrix");
      if (piv != col)
        for (int j = 0; j < c_; ++j) {
          std::swap(m(piv, j), m(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      Rational f = Rational(1) / m(col, col);
      for (int j = 0; j < c_; ++j) {
        m(col, j) *= f;
        inv(col, j) *= f;
      }
      for (int i = 0; i < r_; ++i) {
        if (i == col || m(i, col) == 0) continue;
        Rational g = m(i, col);
        for (int j = 0; j < c_; ++j) {
          m(i, j) -= g * m(col, j);
          inv(i, j) -= g * inv(col, j);
        }
      }
    }
    return inv;
  }

  // Integer power; negative exponents use the inverse.
  RatMat pow(long e) const {
    if (r_ != c_) throw std::domain_error("pow of non-square");
    RatMat base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RatMat out = identity(r_);
    while (k) {
      if (k & 1) out = out * base;
      base = base * base;
      k >>= 1;
    }
    return out;
  }

  int rank() const {
    RatMat m = *this;
    int rk = 0;
    for (int col = 0; col < c_ && rk < r_; ++col) {
      int piv = -1;
      for (int i = rk; i < r_; ++i)
        if (m(i, col) != 0) { piv = i; break; }
      if (piv < 0) continue;
      if (piv != rk)
        for (int j = 0; j < c_; ++j) std::swap(m(piv, j), m(rk, j));
      Rational inv = Rational(1) / m(rk, col);
      for (int i = rk + 1; i < r_; ++i) {
        if (m(i, col) == 0) continue;
        Rational f = m(i, col) * inv;
        for (int j = col; j < c_; ++j) m(i, j) -= f * m(rk, j);
      }
      ++rk;
    }
    return rk;
  }

  RatMat block(int i0, int j0, int rows, int cols) const {
    RatMat out(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
    return out;
  }

  void set_block(int i0, int j0, const RatMat& b) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < r_; ++i) {
      s += i ? "; " : "[";
      for (int j = 0; j < c_; ++j) {
        if (j) s += " ";
        s += rat_str((*this)(i, j));
      }
    }
    return s + "]";
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

}  // namespace rao
