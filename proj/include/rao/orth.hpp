#pragma once

#include "rao/matrix.hpp"
#include "rao/place.hpp"
#include "rao/qform.hpp"

namespace rao {

// Odd orthogonal space V of dimension 2n+1 and normalized discriminant 1,
// in the basis (x_1..x_n, x_0, x*_1..x*_n). The split space (epsilon = +1)
// carries the standard basis relations b(x_i, x*_j) = delta, q(x_0) = 1.
// The non-split space (epsilon = -1) replaces the last hyperbolic pair and
// x_0 by a ternary form anisotropic at the working place; no standard
// x-basis exists there, so only invariants are exposed.
struct OrthSpace {
  int n;
  int eps;
  Place v;
  RatMat gram;  // gram of b_q; q(x) = b(x,x)/2

  int dim() const { return 2 * n + 1; }
  QuadForm form() const { return QuadForm(gram); }
};

OrthSpace orth_space(int n, int eps, const Place& v = Place::prime(2));

bool in_so(const OrthSpace& sp, const RatMat& h);

// Block generators of SO(V+) for the maximal parabolic stabilizing X_k.
RatMat so_l(const OrthSpace& sp, int k, const RatMat& a);
// u^b(b): b is k x (2(n-k)+1), columns ordered (x_{k+1}..x_n, x_0, x*_{k+1}..x*_n).
RatMat so_u_b(const OrthSpace& sp, int k, const RatMat& b);
// u^c(c): c k x k alternating.
RatMat so_u_c(const OrthSpace& sp, int k, const RatMat& c);
RatMat so_w_x(const OrthSpace& sp, int k);

// Witt index of the space at its working place.
int max_isotropic_dim(const OrthSpace& sp);

// Normalized discriminant class (-1)^n prod(q-coefficients) at v.
SquareClass disc_normalized(const OrthSpace& sp, const Place& v);

}  // namespace rao
