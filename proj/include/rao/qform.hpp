#pragma once

#include "rao/character.hpp"
#include "rao/matrix.hpp"
#include "rao/mu8.hpp"
#include "rao/squares.hpp"
#include "rao/symplectic.hpp"

#include <vector>

namespace rao {

// Quadratic form over Q, stored by the Gram matrix of the bilinear form b;
// the quadratic value is q(v) = b(v, v) / 2.
struct QuadForm {
  RatMat gram;

  explicit QuadForm(RatMat g) : gram(std::move(g)) {
    if (gram.rows() != gram.cols()) throw std::domain_error("gram must be square");
    if (gram != gram.transpose()) throw std::domain_error("gram must be symmetric");
  }

  static QuadForm from_diagonal(const std::vector<Rational>& d) {
    RatMat g(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) g(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return QuadForm(std::move(g));
  }

  int dim() const { return gram.rows(); }

  QuadForm negated() const { return QuadForm(gram.scaled(-1)); }

  QuadForm direct_sum(const QuadForm& o) const {
    RatMat g(dim() + o.dim(), dim() + o.dim());
    g.set_block(0, 0, gram);
    g.set_block(dim(), dim(), o.gram);
    return QuadForm(std::move(g));
  }
};

// Diagonal Gram entries of an orthogonal basis of the nondegenerate quotient
// (the radical is split off and dropped). Length = rank.
std::vector<Rational> diagonalize(const QuadForm& q);

struct LocalInvariants {
  int rank;
  SquareClass disc;   // class of the product of the diagonal entries
  int hasse;          // prod_{i<j} (a_i, a_j)_v
};

LocalInvariants invariants(const QuadForm& q, const Place& v);

// True iff q1 perp (-q2) is split at v; i.e. q1 and q2 have equal Witt class.
bool witt_equivalent(const QuadForm& q1, const QuadForm& q2, const Place& v);

// Dimension of a maximal totally isotropic subspace over Q_v (the Witt
// index of the nondegenerate quotient).
int witt_index(const QuadForm& q, const Place& v);

// gamma(psi o q) for nondegenerate q: product of weil_index(d_i / 2, psi)
// over a diagonalization (d_i are Gram entries, d_i/2 the q-coefficients).
Mu8 weil_index_form(const QuadForm& q, const AdditiveCharacter& psi);

// Same, but a radical is allowed and silently dropped.
Mu8 weil_index_form_semidef(const QuadForm& q, const AdditiveCharacter& psi);

// The Maslov/Kashiwara form of a Lagrangian triple:
// Q(v1 + v2 + v3) = <v1,v2> + <v2,v3> + <v3,v1> on l1 + l2 + l3 (dim 3n,
// possibly degenerate; callers quotient by the radical downstream).
QuadForm kashiwara_form(const SympSpace& sp, const Lagrangian& l1, const Lagrangian& l2,
                        const Lagrangian& l3);

}  // namespace rao
