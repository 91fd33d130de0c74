#include "rao/orth.hpp"

#include "rao/hilbert.hpp"

namespace rao {

OrthSpace orth_space(int n, int eps, const Place& v) {
  if (eps != 1 && eps != -1) throw std::domain_error("epsilon must be +-1");
  if (n < (eps == 1 ? 0 : 1)) throw std::domain_error("rank too small for epsilon");
  const int d = 2 * n + 1;
  RatMat g(d, d);
  if (eps == 1) {
    for (int i = 0; i < n; ++i) {
      g(i, n + 1 + i) = 1;
      g(n + 1 + i, i) = 1;
    }
    g(n, n) = 2;
  } else {
    if (!v.finite) throw std::domain_error("non-split space needs a finite place");
    for (int i = 0; i + 1 < n; ++i) {
      g(i, n + 1 + i) = 1;
      g(n + 1 + i, i) = 1;
    }
    // ternary anisotropic at v with q-coefficient product -1: the negated
    // pure-quaternion form <a, b, -ab> of a division algebra (a,b)_v = -1
    Rational a, b;
    if (v.p == 2) {
      a = -1;
      b = -1;
    } else {
      a = smallest_nonresidue(v.p);
      b = v.p;
    }
    g(n - 1, n - 1) = 2 * a;
    g(n, n) = 2 * b;
    g(2 * n, 2 * n) = -2 * a * b;
  }
  OrthSpace sp{n, eps, v, g};
  if (disc_normalized(sp, v).rep != 1) throw std::logic_error("orth_space: discriminant");
  if (max_isotropic_dim(sp) != n - (1 - eps) / 2)
    throw std::logic_error("orth_space: isotropic dimension");
  return sp;
}

bool in_so(const OrthSpace& sp, const RatMat& h) {
  if (h.rows() != sp.dim() || h.cols() != sp.dim()) return false;
  return h.transpose() * sp.gram * h == sp.gram && h.det() == 1;
}

RatMat so_l(const OrthSpace& sp, int k, const RatMat& a) {
  if (sp.eps != 1) throw std::domain_error("generators exist for the split space only");
  const int n = sp.n;
  if (k < 1 || k > n || a.rows() != k || a.cols() != k) throw std::domain_error("so_l: shape");
  RatMat g = RatMat::identity(sp.dim());
  RatMat at = a.inverse().transpose();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      g(i, j) = a(i, j);
      g(n + 1 + i, n + 1 + j) = at(i, j);
    }
  return g;
}

RatMat so_u_b(const OrthSpace& sp, int k, const RatMat& b) {
  if (sp.eps != 1) throw std::domain_error("generators exist for the split space only");
  const int n = sp.n, n0 = n - k, d = sp.dim(), w = 2 * n0 + 1;
  if (b.rows() != k || b.cols() != w) throw std::domain_error("so_u_b: shape");
  // V_{n-k} coordinates (x_{k+1}..x_n, x_0, x*_{k+1}..x*_n) sit at
  // rows/cols k..n-1, n, n+1+k..2n.
  auto vidx = [&](int j) { return j < n0 ? k + j : (j == n0 ? n : n + 1 + k + (j - n0 - 1)); };
  RatMat N(d, d);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < w; ++j) N(i, vidx(j)) = b(i, j);
  // N(x*_i) = -bhat(x*_i) with b(w, bhat x*_i) = b(b w, x*_i); the V_0 gram
  // in the ordered coordinates is G0.
  RatMat g0(w, w);
  for (int j = 0; j < n0; ++j) {
    g0(j, n0 + 1 + j) = 1;
    g0(n0 + 1 + j, j) = 1;
  }
  g0(n0, n0) = 2;
  RatMat bhat = g0.inverse() * b.transpose();  // w x k
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < w; ++j) N(vidx(j), n + 1 + i) = -bhat(j, i);
  RatMat N2 = N * N;
  return RatMat::identity(d) + N + N2.scaled(Rational(1, 2));
}

RatMat so_u_c(const OrthSpace& sp, int k, const RatMat& c) {
  if (sp.eps != 1) throw std::domain_error("generators exist for the split space only");
  const int n = sp.n;
  if (c.rows() != k || c.cols() != k) throw std::domain_error("so_u_c: shape");
  if (c != c.transpose().scaled(-1)) throw std::domain_error("so_u_c: c must be alternating");
  RatMat g = RatMat::identity(sp.dim());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, n + 1 + j) = c(i, j);
  return g;
}

RatMat so_w_x(const OrthSpace& sp, int k) {
  if (sp.eps != 1) throw std::domain_error("generators exist for the split space only");
  const int n = sp.n, d = sp.dim();
  if (k < 1 || k > n) throw std::domain_error("so_w_x: k out of range");
  RatMat g(d, d);
  for (int i = 0; i < k; ++i) {
    g(i, n + 1 + i) = -1;  // x*_i -> -x_i
    g(n + 1 + i, i) = -1;  // x_i -> -x*_i
  }
  Rational s = (k % 2 == 0) ? 1 : -1;
  for (int i = k; i < n; ++i) {
    g(i, i) = s;
    g(n + 1 + i, n + 1 + i) = s;
  }
  g(n, n) = s;
  return g;
}

int max_isotropic_dim(const OrthSpace& sp) { return witt_index(sp.form(), sp.v); }

SquareClass disc_normalized(const OrthSpace& sp, const Place& v) {
  auto d = diagonalize(sp.form());
  Rational prod = (sp.n % 2 == 0) ? 1 : -1;
  for (const auto& x : d) prod *= x / 2;
  return square_class(prod, v);
}

}  // namespace rao
