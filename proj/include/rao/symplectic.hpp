#pragma once

#include "rao/matrix.hpp"
#include "rao/place.hpp"
#include "rao/squares.hpp"

#include <set>
#include <vector>

namespace rao {

// Symplectic space of dimension 2n with basis (y_1..y_n, y*_1..y*_n) and
// <y_i, y*_j> = delta_{ij}. Elements are 2n x 2n matrices acting on column
// coordinates in this basis.
struct SympSpace {
  int n;

  explicit SympSpace(int rank) : n(rank) {
    if (rank < 1) throw std::domain_error("symplectic rank must be >= 1");
  }

  int dim() const { return 2 * n; }

  RatMat gram() const {
    RatMat w(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      w(i, n + i) = 1;
      w(n + i, i) = -1;
    }
    return w;
  }
};

bool is_symplectic(const SympSpace& sp, const RatMat& g);

// Stabilizer of Y_n = span(y_1..y_n): block upper triangular.
bool in_siegel_parabolic(const SympSpace& sp, const RatMat& g);

// det(g restricted to Y_n) for g in the Siegel parabolic.
Rational det_on_y(const SympSpace& sp, const RatMat& g);

// --- generators -------------------------------------------------------------

// m(a) on Y_k: a on Y_k, identity on W_{n-k}, (a^*)^{-1} on Y*_k.
RatMat sp_m(const SympSpace& sp, int k, const RatMat& a);
// Siegel Levi m_n(a), a in GL_n.
RatMat sp_m_levi(const SympSpace& sp, const RatMat& a);
// n^c(c) with c : Y*_k -> Y_k symmetric (k x k).
RatMat sp_n_c(const SympSpace& sp, int k, const RatMat& c);
// n^b(b) with b : W_{n-k} -> Y_k; b is k x 2(n-k), columns ordered
// (y_{k+1}..y_n, y*_{k+1}..y*_n).
RatMat sp_n_b(const SympSpace& sp, int k, const RatMat& b);
// sigma_S: y_i -> y*_i, y*_i -> -y_i for i in S (1-based), identity elsewhere.
RatMat sp_sigma(const SympSpace& sp, const std::set<int>& S);
// a_S: y_i -> -y_i, y*_i -> -y*_i for i in S.
RatMat sp_a(const SympSpace& sp, const std::set<int>& S);
// w_Y(k): y*_i -> y_i, y_i -> -y*_i (i <= k), (-1)^k on W_{n-k}.
RatMat sp_w_y(const SympSpace& sp, int k);

// GL_s -> GL_{r+s+t}, A -> diag(1_r, A, 1_t).
RatMat gl_iota(int r, int s, int t, const RatMat& a);
// Antidiagonal J in GL_k with J[i, k+1-i] = (-1)^{n+i} (1-based).
RatMat gl_j(int k, int n);
// kappa_l: superdiagonal -1, bottom-left corner +1.
RatMat gl_kappa(int l);

// --- Bruhat decomposition ---------------------------------------------------

// g = p1 sigma_S p2 with p1, p2 in the Siegel parabolic; S is the set of
// pivot rows (1-based, sorted) found by top-down elimination of the Y -> Y*
// block, so |S| is the rank of that block.
struct BruhatForm {
  RatMat p1;
  std::set<int> S;
  RatMat p2;
};

BruhatForm bruhat_decompose(const SympSpace& sp, const RatMat& g);

// Rao's x-function: det(p1 p2|_{Y_n}) as an exact rational; only its square
// class is decomposition independent.
Rational x_det(const SympSpace& sp, const RatMat& g);
SquareClass x_function(const SympSpace& sp, const RatMat& g, const Place& v);

// --- Lagrangians ------------------------------------------------------------

struct Lagrangian {
  int n;
  RatMat basis;  // 2n x n, columns span an isotropic subspace of dimension n

  Lagrangian(const SympSpace& sp, RatMat b);
};

Lagrangian lagrangian_y(const SympSpace& sp);
Lagrangian lagrangian_y_star(const SympSpace& sp);
Lagrangian apply(const SympSpace& sp, const RatMat& g, const Lagrangian& l);

}  // namespace rao
