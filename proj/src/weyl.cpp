#include "rao/weyl.hpp"

#include "rao/hilbert.hpp"

namespace rao {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm w;
  w.perm.resize(n);
  w.sign.assign(n, 1);
  for (int i = 0; i < n; ++i) w.perm[i] = i;
  return w;
}

SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b) {
  int n = static_cast<int>(a.perm.size());
  SignedPerm out = SignedPerm::identity(n);
  for (int i = 0; i < n; ++i) {
    out.perm[i] = a.perm[b.perm[i]];
    out.sign[i] = b.sign[i] * a.sign[b.perm[i]];
  }
  return out;
}

SignedPerm simple_reflection(int n, int i) {
  if (i < 1 || i > n) throw std::domain_error("simple reflection index out of range");
  SignedPerm w = SignedPerm::identity(n);
  if (i < n) {
    std::swap(w.perm[i - 1], w.perm[i]);
  } else {
    w.sign[n - 1] = -1;
  }
  return w;
}

SignedPerm word_to_perm(int n, const ReducedWord& w) {
  SignedPerm out = SignedPerm::identity(n);
  for (int i : w) out = sp_compose(out, simple_reflection(n, i));
  return out;
}

namespace {
// Image of the formal root vector sum c_i e_i; negative iff the first
// nonzero coefficient is negative.
bool image_negative(const SignedPerm& w, const std::vector<int>& root) {
  int n = static_cast<int>(w.perm.size());
  std::vector<int> img(n, 0);
  for (int i = 0; i < n; ++i)
    if (root[i]) img[w.perm[i]] += w.sign[i] * root[i];
  for (int i = 0; i < n; ++i) {
    if (img[i] > 0) return false;
    if (img[i] < 0) return true;
  }
  throw std::logic_error("root image vanished");
}
}  // namespace

int coxeter_length(const SignedPerm& w) {
  int n = static_cast<int>(w.perm.size());
  int len = 0;
  std::vector<int> root(n, 0);
  for (int i = 0; i < n; ++i) {
    root.assign(n, 0);
    root[i] = 2;  // 2 e_i
    len += image_negative(w, root);
    for (int j = i + 1; j < n; ++j) {
      root.assign(n, 0);
      root[i] = 1;
      root[j] = -1;  // e_i - e_j
      len += image_negative(w, root);
      root[j] = 1;  // e_i + e_j
      len += image_negative(w, root);
    }
  }
  return len;
}

ReducedWord wM_word(int n, int k) {
  if (k < 1 || k > n) throw std::domain_error("wM_word: k out of range");
  auto r = [&](int i) {
    ReducedWord w;
    for (int j = i; j <= n; ++j) w.push_back(j);
    for (int j = n - 1; j >= i; --j) w.push_back(j);
    return w;
  };
  auto q = [&](int i) {
    ReducedWord w;
    for (int j = k - 1; j >= i; --j) w.push_back(j);
    return w;
  };
  ReducedWord out = r(k);
  for (int i = 1; i <= k - 1; ++i) {
    ReducedWord qi = q(i), rk = r(k);
    out.insert(out.end(), qi.begin(), qi.end());
    out.insert(out.end(), rk.begin(), rk.end());
  }
  return out;
}

namespace {

// Solve for the opposite root vector: Z supported on the transpose support
// of X, constrained to the Lie algebra of the form (Z^T G + G Z = 0 with
// G = gram, or the symplectic version), scaled so that H = [X, Z] satisfies
// [H, X] = 2 X.
RatMat solve_negative(const RatMat& x, const RatMat& gram, bool symplectic_form) {
  const int d = x.rows();
  std::vector<std::pair<int, int>> support;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (x(i, j) != 0) support.emplace_back(j, i);
  const int m = static_cast<int>(support.size());
  // rows: entries of Z^T G + G Z (or Z^T Omega + Omega Z); cols: unknowns
  RatMat sys(d * d, m);
  for (int u = 0; u < m; ++u) {
    RatMat z(d, d);
    z(support[u].first, support[u].second) = 1;
    RatMat cond = z.transpose() * gram + gram * z;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) sys(i * d + j, u) = cond(i, j);
  }
  (void)symplectic_form;
  // nullspace of sys (expected 1-dimensional)
  RatMat mrow = sys;
  std::vector<int> pivot_col;
  int rk = 0;
  for (int col = 0; col < m && rk < mrow.rows(); ++col) {
    int piv = -1;
    for (int i = rk; i < mrow.rows(); ++i)
      if (mrow(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < m; ++j) std::swap(mrow(piv, j), mrow(rk, j));
    Rational inv = Rational(1) / mrow(rk, col);
    for (int j = 0; j < m; ++j) mrow(rk, j) *= inv;
    for (int i = 0; i < mrow.rows(); ++i) {
      if (i == rk || mrow(i, col) == 0) continue;
      Rational f = mrow(i, col);
      for (int j = 0; j < m; ++j) mrow(i, j) -= f * mrow(rk, j);
    }
    pivot_col.push_back(col);
    ++rk;
  }
  if (rk != m - 1) throw std::logic_error("opposite root space is not one dimensional");
  // free column = the one not in pivot_col
  std::vector<Rational> coeff(m, 0);
  {
    int free_col = 0;
    std::vector<bool> isp(m, false);
    for (int c : pivot_col) isp[c] = true;
    while (isp[free_col]) ++free_col;
    coeff[free_col] = 1;
    for (int r2 = 0; r2 < rk; ++r2) coeff[pivot_col[r2]] = -mrow(r2, free_col);
  }
  RatMat z(d, d);
  for (int u = 0; u < m; ++u) z(support[u].first, support[u].second) = coeff[u];
  // bracket scaling
  RatMat h = x * z - z * x;
  RatMat hx = h * x - x * h;
  Rational lambda;
  bool found = false;
  for (int i = 0; i < d && !found; ++i)
    for (int j = 0; j < d && !found; ++j)
      if (x(i, j) != 0) {
        lambda = hx(i, j) / x(i, j);
        found = true;
      }
  if (!found || lambda == 0) throw std::logic_error("degenerate bracket");
  if (hx != x.scaled(lambda)) throw std::logic_error("bracket is not proportional");
  return z.scaled(Rational(2) / lambda);
}

}  // namespace

RootVector root_vector_sp(const SympSpace& sp, int i, bool positive) {
  const int n = sp.n;
  if (i < 1 || i > n) throw std::domain_error("root index out of range");
  RatMat x(2 * n, 2 * n);
  if (i < n) {
    x(i - 1, i) = 1;           // y_{i+1} -> y_i
    x(n + i, n + i - 1) = -1;  // y*_i -> -y*_{i+1}
  } else {
    x(n - 1, 2 * n - 1) = 1;  // y*_n -> y_n
  }
  if (positive) return RootVector{x, i, true};
  return RootVector{solve_negative(x, sp.gram(), true), i, false};
}

RootVector root_vector_so(int n, int i, bool positive) {
  if (i < 1 || i > n) throw std::domain_error("root index out of range");
  const int d = 2 * n + 1;
  // basis (x_1..x_n, x_0, x*_1..x*_n); split gram
  RatMat gram(d, d);
  for (int j = 0; j < n; ++j) {
    gram(j, n + 1 + j) = 1;
    gram(n + 1 + j, j) = 1;
  }
  gram(n, n) = 2;
  RatMat x(d, d);
  if (i < n) {
    x(i - 1, i) = 1;                   // x_{i+1} -> x_i
    x(n + 1 + i, n + i) = -1;          // x*_i -> -x*_{i+1}
  } else {
    x(n - 1, n) = 2;                   // x_0 -> 2 x_n
    x(n, 2 * n) = -1;                  // x*_n -> -x_0
  }
  if (positive) return RootVector{x, i, true};
  return RootVector{solve_negative(x, gram, false), i, false};
}

RatMat exp_nilpotent(const RatMat& x) {
  if (x.rows() != x.cols()) throw std::domain_error("exp of non-square");
  RatMat out = RatMat::identity(x.rows());
  RatMat term = RatMat::identity(x.rows());
  for (int k = 1; k <= x.rows() + 1; ++k) {
    term = term * x;
    term = term.scaled(Rational(1, k));
    if (term.is_zero()) return out;
    out = out + term;
  }
  throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

RatMat sp_reflection_rep(const SympSpace& sp, int i) {
  RatMat xp = root_vector_sp(sp, i, true).mat;
  RatMat xm = root_vector_sp(sp, i, false).mat;
  return exp_nilpotent(xp) * exp_nilpotent(xm.scaled(-1)) * exp_nilpotent(xp);
}

RatMat so_reflection_rep(int n, int i) {
  RatMat xp = root_vector_so(n, i, true).mat;
  RatMat xm = root_vector_so(n, i, false).mat;
  return exp_nilpotent(xp) * exp_nilpotent(xm.scaled(-1)) * exp_nilpotent(xp);
}

namespace {
FactoredWord word_of_element(const SympSpace& sp, const RatMat& g) {
  FactoredWord w(sp.n);
  if (in_siegel_parabolic(sp, g)) {
    w.push_parabolic(sp, g);
    return w;
  }
  BruhatForm b = bruhat_decompose(sp, g);
  if (!b.p1.is_identity()) w.push_parabolic(sp, b.p1);
  w.push_sigma(b.S);
  if (!b.p2.is_identity()) w.push_parabolic(sp, b.p2);
  return w;
}
}  // namespace

MpElement ls_representative_sp(const SympSpace& sp, const ReducedWord& w, const Place& v,
                               CocycleBackend backend) {
  // Concatenate the per-reflection words and lift letter by letter. The
  // reflection words come out of the decomposition with a trivial leading
  // parabolic, so the letterwise lift agrees with lifting each reflection
  // as a block with sign +1.
  FactoredWord word(sp.n);
  for (int i : w) word.append(sp, word_of_element(sp, sp_reflection_rep(sp, i)));
  return lift_word(sp, word, v, backend);
}

RatMat ls_representative_so(int n, const ReducedWord& w) {
  RatMat acc = RatMat::identity(2 * n + 1);
  for (int i : w) acc = acc * so_reflection_rep(n, i);
  return acc;
}

MpElement target_representative_sp(const SympSpace& sp, int k, const Place& v) {
  const int n = sp.n;
  if (k < 1 || k > n) throw std::domain_error("target representative: k out of range");
  RatMat j = gl_j(k, n);
  RatMat g(2 * n, 2 * n);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      g(a, n + b) = -j(a, b);  // Y*_k -> Y_k by -J
      g(n + a, b) = j(a, b);   // Y_k -> Y*_k by J
    }
  for (int a = k; a < n; ++a) {
    g(a, a) = 1;
    g(n + a, n + a) = 1;
  }
  if (k % 2) g = g.scaled(-1);
  int eps = ((k * (k - 1) / 2) % 2) ? hilbert(-1, -1, v) : 1;
  return MpElement{g, eps, v, std::nullopt};
}

RatMat target_representative_so(int n, int k) {
  if (k < 1 || k > n) throw std::domain_error("target representative: k out of range");
  const int d = 2 * n + 1;
  RatMat j = gl_j(k, n);
  RatMat g(d, d);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      g(a, n + 1 + b) = j(a, b);  // X*_k -> X_k by J
      g(n + 1 + a, b) = j(a, b);  // X_k -> X*_k by J
    }
  for (int a = k; a < n; ++a) {
    g(a, a) = 1;
    g(n + 1 + a, n + 1 + a) = 1;
  }
  g(n, n) = 1;
  if (k % 2) g = g.scaled(-1);
  return g;
}

}  // namespace rao
