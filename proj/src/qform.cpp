#include "rao/qform.hpp"

#include "rao/hilbert.hpp"
#include "rao/weil.hpp"

namespace rao {

std::vector<Rational> diagonalize(const QuadForm& q) {
  RatMat g = q.gram;
  const int n = g.rows();
  std::vector<bool> done(n, false);
  std::vector<Rational> out;
  for (;;) {
    // find a live index with nonzero diagonal
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && g(i, i) != 0) { piv = i; break; }
    if (piv < 0) {
      // no diagonal pivot: look for an off-diagonal entry and fold it in
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; ++i)
        for (int j = i + 1; j < n && a < 0; ++j)
          if (!done[i] && !done[j] && g(i, j) != 0) { a = i; b = j; }
      if (a < 0) break;  // all that remains is the radical
      // v_a += v_b: row/col update gives g(a,a) = 2 g(a,b) != 0
      for (int j = 0; j < n; ++j) g(a, j) += g(b, j);
      for (int i = 0; i < n; ++i) g(i, a) += g(i, b);
      continue;
    }
    out.push_back(g(piv, piv));
    done[piv] = true;
    Rational inv = Rational(1) / g(piv, piv);
    for (int i = 0; i < n; ++i) {
      if (done[i] || g(i, piv) == 0) continue;
      Rational f = g(i, piv) * inv;
      for (int j = 0; j < n; ++j) g(i, j) -= f * g(piv, j);
      for (int j = 0; j < n; ++j) g(j, i) -= f * g(j, piv);
    }
  }
  return out;
}

LocalInvariants invariants(const QuadForm& q, const Place& v) {
  auto d = diagonalize(q);
  Rational prod = 1;
  int hasse = 1;
  for (size_t i = 0; i < d.size(); ++i) {
    prod *= d[i];
    for (size_t j = i + 1; j < d.size(); ++j) hasse *= hilbert(d[i], d[j], v);
  }
  return LocalInvariants{static_cast<int>(d.size()), square_class(prod, v), hasse};
}

namespace {

// Isotropy of a nondegenerate form over Q_v from (rank, disc, hasse);
// the real place is handled from the signature instead.
bool isotropic_finite(int rank, const SquareClass& disc, int hasse, const Place& v) {
  switch (rank) {
    case 0:
    case 1:
      return false;
    case 2:
      return disc == square_class(-1, v);
    case 3:
      return hasse == hilbert(-1, -disc.rep, v);
    case 4:
      return !(disc.rep == 1 && hasse != hilbert(-1, -1, v));
    default:
      return true;
  }
}

}  // namespace

int witt_index(const QuadForm& q, const Place& v) {
  auto d = diagonalize(q);
  if (!v.finite) {
    int pos = 0, neg = 0;
    for (const auto& x : d) (x > 0 ? pos : neg)++;
    return std::min(pos, neg);
  }
  int rank = static_cast<int>(d.size());
  Rational prod = 1;
  int hasse = 1;
  for (size_t i = 0; i < d.size(); ++i) {
    prod *= d[i];
    for (size_t j = i + 1; j < d.size(); ++j) hasse *= hilbert(d[i], d[j], v);
  }
  SquareClass disc = square_class(prod, v);
  int idx = 0;
  while (isotropic_finite(rank, disc, hasse, v)) {
    // split off a hyperbolic plane: disc -> -disc, hasse -> hasse (-1, -disc)
    hasse *= hilbert(-1, -disc.rep, v);
    disc = disc * square_class(-1, v);
    rank -= 2;
    ++idx;
  }
  return idx;
}

bool witt_equivalent(const QuadForm& q1, const QuadForm& q2, const Place& v) {
  QuadForm s = q1.direct_sum(q2.negated());
  auto d = diagonalize(s);
  if (d.size() % 2 != 0) return false;
  return witt_index(s, v) == static_cast<int>(d.size()) / 2;
}

Mu8 weil_index_form(const QuadForm& q, const AdditiveCharacter& psi) {
  auto d = diagonalize(q);
  if (static_cast<int>(d.size()) != q.dim())
    throw std::domain_error("weil_index_form: degenerate form");
  Mu8 out;
  for (const auto& x : d) out = out * weil_index(x / 2, psi);
  return out;
}

Mu8 weil_index_form_semidef(const QuadForm& q, const AdditiveCharacter& psi) {
  Mu8 out;
  for (const auto& x : diagonalize(q)) out = out * weil_index(x / 2, psi);
  return out;
}

QuadForm kashiwara_form(const SympSpace& sp, const Lagrangian& l1, const Lagrangian& l2,
                        const Lagrangian& l3) {
  if (l1.n != sp.n || l2.n != sp.n || l3.n != sp.n)
    throw std::domain_error("kashiwara_form: mismatched ambient spaces");
  const int n = sp.n;
  RatMat w = sp.gram();
  RatMat p12 = l1.basis.transpose() * w * l2.basis;
  RatMat p23 = l2.basis.transpose() * w * l3.basis;
  RatMat p13 = (l1.basis.transpose() * w * l3.basis).scaled(-1);  // b(u, w) = <w, u>
  RatMat g(3 * n, 3 * n);
  g.set_block(0, n, p12);
  g.set_block(n, 0, p12.transpose());
  g.set_block(n, 2 * n, p23);
  g.set_block(2 * n, n, p23.transpose());
  g.set_block(0, 2 * n, p13);
  g.set_block(2 * n, 0, p13.transpose());
  return QuadForm(std::move(g));
}

}  // namespace rao
