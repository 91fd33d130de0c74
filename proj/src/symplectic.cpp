#include "rao/symplectic.hpp"

namespace rao {

bool is_symplectic(const SympSpace& sp, const RatMat& g) {
  if (g.rows() != sp.dim() || g.cols() != sp.dim()) return false;
  return g.transpose() * sp.gram() * g == sp.gram();
}

bool in_siegel_parabolic(const SympSpace& sp, const RatMat& g) {
  const int n = sp.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g(n + i, j) != 0) return false;
  return true;
}

Rational det_on_y(const SympSpace& sp, const RatMat& g) {
  return g.block(0, 0, sp.n, sp.n).det();
}

RatMat sp_m(const SympSpace& sp, int k, const RatMat& a) {
  if (k < 1 || k > sp.n || a.rows() != k || a.cols() != k)
    throw std::domain_error("sp_m: bad block size");
  return sp_m_levi(sp, gl_iota(0, k, sp.n - k, a));
}

RatMat sp_m_levi(const SympSpace& sp, const RatMat& a) {
  const int n = sp.n;
  if (a.rows() != n || a.cols() != n) throw std::domain_error("sp_m_levi: shape");
  RatMat ainvt = a.inverse().transpose();
  RatMat g(2 * n, 2 * n);
  g.set_block(0, 0, a);
  g.set_block(n, n, ainvt);
  return g;
}

RatMat sp_n_c(const SympSpace& sp, int k, const RatMat& c) {
  const int n = sp.n;
  if (c.rows() != k || c.cols() != k) throw std::domain_error("sp_n_c: shape");
  if (c != c.transpose()) throw std::domain_error("sp_n_c: c must be symmetric");
  RatMat g = RatMat::identity(2 * n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, n + j) = c(i, j);
  return g;
}

RatMat sp_n_b(const SympSpace& sp, int k, const RatMat& b) {
  const int n = sp.n, n0 = n - k;
  if (b.rows() != k || b.cols() != 2 * n0) throw std::domain_error("sp_n_b: shape");
  // Nilpotent N: W_{n-k} -> Y_k by b, Y*_k -> W_{n-k} by the symplectic adjoint.
  RatMat N(2 * n, 2 * n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n0; ++j) {
      N(i, k + j) = b(i, j);            // y_{k+1+j} column
      N(i, n + k + j) = b(i, n0 + j);   // y*_{k+1+j} column
    }
  // N(y*_i) = -bhat(y*_i), <w, bhat(y*_i)> = <b w, y*_i>.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n0; ++j) {
      N(n + k + j, n + i) = -b(i, j);   // y*_{k+1+j} component: <y_{k+j}, .> picks it
      N(k + j, n + i) = b(i, n0 + j);   // y_{k+1+j} component: beta_j = -b[i, y*-col]
    }
  RatMat N2 = N * N;
  return RatMat::identity(2 * n) + N + N2.scaled(Rational(1, 2));
}

RatMat sp_sigma(const SympSpace& sp, const std::set<int>& S) {
  const int n = sp.n;
  RatMat g = RatMat::identity(2 * n);
  for (int i : S) {
    if (i < 1 || i > n) throw std::domain_error("sp_sigma: index out of range");
    g(i - 1, i - 1) = 0;
    g(n + i - 1, n + i - 1) = 0;
    g(n + i - 1, i - 1) = 1;   // y_i -> y*_i
    g(i - 1, n + i - 1) = -1;  // y*_i -> -y_i
  }
  return g;
}

RatMat sp_a(const SympSpace& sp, const std::set<int>& S) {
  const int n = sp.n;
  RatMat g = RatMat::identity(2 * n);
  for (int i : S) {
    if (i < 1 || i > n) throw std::domain_error("sp_a: index out of range");
    g(i - 1, i - 1) = -1;
    g(n + i - 1, n + i - 1) = -1;
  }
  return g;
}

RatMat sp_w_y(const SympSpace& sp, int k) {
  const int n = sp.n;
  if (k < 1 || k > n) throw std::domain_error("sp_w_y: k out of range");
  RatMat g(2 * n, 2 * n);
  for (int i = 0; i < k; ++i) {
    g(i, n + i) = 1;   // y*_i -> y_i
    g(n + i, i) = -1;  // y_i -> -y*_i
  }
  Rational s = (k % 2 == 0) ? 1 : -1;
  for (int i = k; i < n; ++i) {
    g(i, i) = s;
    g(n + i, n + i) = s;
  }
  return g;
}

RatMat gl_iota(int r, int s, int t, const RatMat& a) {
  if (a.rows() != s || a.cols() != s) throw std::domain_error("gl_iota: shape");
  RatMat m = RatMat::identity(r + s + t);
  m.set_block(r, r, a);
  return m;
}

RatMat gl_j(int k, int n) {
  RatMat j(k, k);
  for (int i = 1; i <= k; ++i) j(i - 1, k - i) = ((n + i) % 2 == 0) ? 1 : -1;
  return j;
}

RatMat gl_kappa(int l) {
  RatMat m(l, l);
  for (int i = 0; i + 1 < l; ++i) m(i, i + 1) = -1;
  m(l - 1, 0) = 1;
  return m;
}

BruhatForm bruhat_decompose(const SympSpace& sp, const RatMat& g) {
  const int n = sp.n;
  if (!is_symplectic(sp, g)) throw std::domain_error("bruhat_decompose: not symplectic");
  RatMat C = g.block(n, 0, n, n);

  // Greedy top-down row elimination: S = rows independent of the rows above.
  // R is unipotent with R C supported on the rows in S.
  RatMat R = RatMat::identity(n);
  std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order
  RatMat work = C;
  std::set<int> S;
  for (int i = 0; i < n; ++i) {
    for (auto [pr, pc] : pivots) {
      if (work(i, pc) == 0) continue;
      Rational f = work(i, pc) / work(pr, pc);
      for (int j = 0; j < n; ++j) {
        work(i, j) -= f * work(pr, j);
        R(i, j) -= f * R(pr, j);
      }
    }
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (work(i, j) != 0) { pc = j; break; }
    if (pc >= 0) {
      pivots.emplace_back(i, pc);
      S.insert(i + 1);
    }
  }

  // A2 agrees with R C on the S rows and is completed to GL_n by unit rows.
  RatMat A2 = RatMat(n, n);
  std::set<int> used_cols;
  for (auto [pr, pc] : pivots) used_cols.insert(pc);
  {
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
      if (!used_cols.count(j)) free_cols.push_back(j);
    size_t f = 0;
    for (int i = 0; i < n; ++i) {
      if (S.count(i + 1)) {
        for (int j = 0; j < n; ++j) A2(i, j) = work(i, j);
      } else {
        A2(i, free_cols[f++]) = 1;
      }
    }
  }

  RatMat g2 = sp_m_levi(sp, R.inverse().transpose()) * g * sp_m_levi(sp, A2.inverse());
  // Lower-left of g2 is the indicator of S; kill the S x S block of the
  // lower-right with a symmetric unipotent.
  RatMat D2 = g2.block(n, n, n, n);
  RatMat X(n, n);
  for (int i : S)
    for (int j : S) X(i - 1, j - 1) = -D2(i - 1, j - 1);
  if (X != X.transpose()) throw std::logic_error("bruhat_decompose: asymmetric correction");
  RatMat u = RatMat::identity(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u(i, n + j) = X(i, j);
  RatMat g3 = g2 * u;
  RatMat sig = sp_sigma(sp, S);
  RatMat h = g3 * sig.inverse();
  if (!in_siegel_parabolic(sp, h)) throw std::logic_error("bruhat_decompose: reduction failed");

  BruhatForm out;
  out.p1 = sp_m_levi(sp, R.transpose()) * h;
  RatMat uinv = RatMat::identity(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) uinv(i, n + j) = -X(i, j);
  out.p2 = uinv * sp_m_levi(sp, A2);
  out.S = S;
  return out;
}

Rational x_det(const SympSpace& sp, const RatMat& g) {
  BruhatForm b = bruhat_decompose(sp, g);
  return det_on_y(sp, b.p1) * det_on_y(sp, b.p2);
}

SquareClass x_function(const SympSpace& sp, const RatMat& g, const Place& v) {
  return square_class(x_det(sp, g), v);
}

Lagrangian::Lagrangian(const SympSpace& sp, RatMat b) : n(sp.n), basis(std::move(b)) {
  if (basis.rows() != 2 * n || basis.cols() != n)
    throw std::domain_error("lagrangian: basis shape");
  if (basis.rank() != n) throw std::domain_error("lagrangian: columns not independent");
  if (!(basis.transpose() * sp.gram() * basis).is_zero())
    throw std::domain_error("lagrangian: subspace not isotropic");
}

Lagrangian lagrangian_y(const SympSpace& sp) {
  RatMat b(2 * sp.n, sp.n);
  for (int i = 0; i < sp.n; ++i) b(i, i) = 1;
  return Lagrangian(sp, b);
}

Lagrangian lagrangian_y_star(const SympSpace& sp) {
  RatMat b(2 * sp.n, sp.n);
  for (int i = 0; i < sp.n; ++i) b(sp.n + i, i) = 1;
  return Lagrangian(sp, b);
}

Lagrangian apply(const SympSpace& sp, const RatMat& g, const Lagrangian& l) {
  return Lagrangian(sp, g * l.basis);
}

}  // namespace rao
