#include "rao/cocycle.hpp"

#include "rao/hilbert.hpp"
#include "rao/qform.hpp"
#include "rao/weil.hpp"

#include <algorithm>

namespace rao {

void FactoredWord::push_parabolic(const SympSpace& sp, const RatMat& p) {
  if (sp.n != n_) throw std::domain_error("word/space rank mismatch");
  if (!is_symplectic(sp, p) || !in_siegel_parabolic(sp, p))
    throw std::domain_error("letter is not in the Siegel parabolic");
  letters_.push_back(Letter{Letter::kParabolic, p, det_on_y(sp, p), {}});
}

void FactoredWord::push_sigma(const std::set<int>& S) {
  for (int i : S)
    if (i < 1 || i > n_) throw std::domain_error("sigma index out of range");
  letters_.push_back(Letter{Letter::kSigma, RatMat(), 0, S});
}

void FactoredWord::append(const SympSpace& sp, const FactoredWord& w) {
  if (w.n_ != n_) throw std::domain_error("word rank mismatch");
  (void)sp;
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

RatMat FactoredWord::product(const SympSpace& sp) const {
  RatMat g = RatMat::identity(2 * n_);
  for (const auto& l : letters_)
    g = g * (l.kind == Letter::kParabolic ? l.mat : sp_sigma(sp, l.S));
  return g;
}

FactoredWord FactoredWord::inverse(const SympSpace& sp) const {
  FactoredWord out(n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    if (it->kind == Letter::kParabolic) {
      out.push_parabolic(sp, it->mat.inverse());
    } else {
      out.push_parabolic(sp, sp_a(sp, it->S));  // sigma_S^{-1} = a_S sigma_S
      out.push_sigma(it->S);
    }
  }
  return out;
}

void FactoredWord::normalize(const SympSpace& sp) {
  std::vector<Letter> fused;
  for (const auto& l : letters_) {
    if (l.kind == Letter::kSigma) {
      if (l.S.empty()) continue;
      fused.push_back(l);
      continue;
    }
    if (l.mat.is_identity()) continue;
    if (!fused.empty() && fused.back().kind == Letter::kParabolic) {
      fused.back().mat = fused.back().mat * l.mat;
      fused.back().xdet = fused.back().xdet * l.xdet;
      if (fused.back().mat.is_identity()) fused.pop_back();
    } else {
      fused.push_back(l);
    }
  }
  int sigmas = 0;
  for (const auto& l : fused)
    if (l.kind == Letter::kSigma) ++sigmas;
  bool shape_ok = false;
  if (sigmas == 0)
    shape_ok = fused.size() <= 1;
  else if (sigmas == 1) {
    size_t k = 0;
    while (k < fused.size() && fused[k].kind != Letter::kSigma) ++k;
    shape_ok = fused.size() <= 3 && k <= 1 && fused.size() - k <= 2;
  }
  if (shape_ok) {
    letters_ = std::move(fused);
    return;
  }
  // refactor through the canonical Bruhat form
  letters_ = std::move(fused);
  BruhatForm b = bruhat_decompose(sp, product(sp));
  letters_.clear();
  if (b.S.empty()) {
    RatMat p = b.p1 * b.p2;
    if (!p.is_identity()) push_parabolic(sp, p);
    return;
  }
  if (!b.p1.is_identity()) push_parabolic(sp, b.p1);
  push_sigma(b.S);
  if (!b.p2.is_identity()) push_parabolic(sp, b.p2);
}

namespace {

class WordReducer {
 public:
  WordReducer(const SympSpace& sp, const Place& v) : sp_(sp), v_(v) {}

  int reduce(FactoredWord w1, FactoredWord w2, bool flipped) {
    if (++depth_ > 200) throw IrreduciblePair();
    w1.normalize(sp_);
    w2.normalize(sp_);
    if (w1.empty() || w2.empty()) return 1;  // normalized cocycle
    RatMat g1 = w1.product(sp_), g2 = w2.product(sp_);
    // c(p, g) = c(g, p) = (x(p), x(g))
    if (in_siegel_parabolic(sp_, g1)) return hilbert(det_on_y(sp_, g1), xq(g2), v_);
    if (in_siegel_parabolic(sp_, g2)) return hilbert(det_on_y(sp_, g2), xq(g1), v_);

    const auto& l1 = w1.letters();
    const auto& l2 = w2.letters();

    // outer strip: c(p g, g' p') = c(g, g') (x(g),x(p)) (x(g'),x(p')) (x(p),x(p')) (x(gg'),x(pp'))
    if (l1.front().kind == Letter::kParabolic || l2.back().kind == Letter::kParabolic) {
      Rational xp = 1, xpp = 1;
      FactoredWord a(sp_.n), b(sp_.n);
      size_t i0 = 0, j1 = l2.size();
      if (l1.front().kind == Letter::kParabolic) {
        xp = l1.front().xdet;
        i0 = 1;
      }
      if (l2.back().kind == Letter::kParabolic) {
        xpp = l2.back().xdet;
        --j1;
      }
      for (size_t i = i0; i < l1.size(); ++i) push(a, l1[i]);
      for (size_t j = 0; j < j1; ++j) push(b, l2[j]);
      RatMat ga = a.product(sp_), gb = b.product(sp_);
      int s = hilbert(xq(ga), xp, v_) * hilbert(xq(gb), xpp, v_) * hilbert(xp, xpp, v_) *
              hilbert(xq(ga * gb), xp * xpp, v_);
      return s * reduce(a, b, flipped);
    }

    // absorb a trailing parabolic across the comma:
    // c(A p, B) = c(A, p) c(p, B) c(A, p B)
    if (l1.back().kind == Letter::kParabolic) {
      Letter p = l1.back();
      FactoredWord a(sp_.n);
      for (size_t i = 0; i + 1 < l1.size(); ++i) push(a, l1[i]);
      int s = hilbert(p.xdet, xq(a.product(sp_)), v_) * hilbert(p.xdet, xq(g2), v_);
      FactoredWord b(sp_.n);
      push(b, p);
      for (const auto& l : l2) push(b, l);
      return s * reduce(a, b, flipped);
    }

    // now w1 = [sigma_S]
    const std::set<int>& S = l1.front().S;
    if (l2.size() == 1) {
      // base case c(sigma_S, sigma_T) = (-1,-1)^{j(j+1)/2}
      const std::set<int>& T = l2.front().S;
      int j = 0;
      for (int i : S) j += T.count(i);
      return ((j * (j + 1) / 2) % 2) ? hilbert(-1, -1, v_) : 1;
    }

    // w2 = [r, sigma_T]: move r through one of the sigmas
    const Letter& r = l2.front();
    const std::set<int>& T = l2.back().S;
    RatMat sigT = sp_sigma(sp_, T);
    RatMat rT = sigT.inverse() * r.mat * sigT;
    if (in_siegel_parabolic(sp_, rT)) {
      FactoredWord b(sp_.n);
      b.push_sigma(T);
      b.push_parabolic(sp_, rT);
      return reduce(w1, b, flipped);
    }
    RatMat sigS = g1;
    RatMat rS = sigS * r.mat * sigS.inverse();
    if (in_siegel_parabolic(sp_, rS)) {
      // c(sigma_S, r B) = c(sigma_S, r) c(r, B) c(sigma_S r, B); the first two
      // are trivial since x(sigma) = 1, and sigma_S r = rS sigma_S.
      FactoredWord a(sp_.n), b(sp_.n);
      a.push_parabolic(sp_, rS);
      a.push_sigma(S);
      b.push_sigma(T);
      return reduce(a, b, flipped);
    }
    if (!flipped && g1 * g2 == g2 * g1) return reduce(w2, w1, true);
    throw IrreduciblePair();
  }

 private:
  static void push(FactoredWord& w, const Letter& l) {
    if (l.kind == Letter::kParabolic) {
      // letters were validated on construction; re-push directly
      w.push_raw(l);
    } else {
      w.push_sigma(l.S);
    }
  }

  Rational xq(const RatMat& g) const {
    if (in_siegel_parabolic(sp_, g)) return det_on_y(sp_, g);
    return x_det(sp_, g);
  }

  const SympSpace& sp_;
  const Place& v_;
  int depth_ = 0;
};

}  // namespace

int cocycle_word(const SympSpace& sp, const FactoredWord& w1, const FactoredWord& w2,
                 const Place& v) {
  if (w1.n() != sp.n || w2.n() != sp.n) throw std::domain_error("word rank mismatch");
  return WordReducer(sp, v).reduce(w1, w2, false);
}

int cocycle_leray(const SympSpace& sp, const RatMat& g1, const RatMat& g2, const Place& v,
                  const AdditiveCharacter& psi) {
  if (psi.v != v) throw std::domain_error("character place mismatch");
  // The triple is based at Y_n, the Lagrangian the Siegel parabolic
  // stabilizes; that choice is what makes the beta-coboundary reproduce
  // c(p, g) = (x(p), x(g)).
  Lagrangian l = lagrangian_y(sp);
  Lagrangian m2 = apply(sp, g1, l);
  Lagrangian m3 = apply(sp, g1 * g2, l);
  Mu8 gq = weil_index_form_semidef(kashiwara_form(sp, l, m2, m3), psi);
  auto beta_inv = [&](const RatMat& g) {
    BruhatForm b = bruhat_decompose(sp, g);
    Rational x = det_on_y(sp, b.p1) * det_on_y(sp, b.p2);
    return normalized_weil_index(x, psi) * weil_index(1, psi).pow(static_cast<long>(b.S.size()));
  };
  Mu8 c = gq * beta_inv(g1 * g2) / (beta_inv(g1) * beta_inv(g2));
  if (!c.is_sign()) throw std::logic_error("leray cocycle: normalization is not a sign");
  return c.sign();
}

namespace {

int cocycle_eval(const SympSpace& sp, const MpElement& x, const MpElement& y,
                 CocycleBackend backend) {
  if (backend != CocycleBackend::kLeray && x.word && y.word) {
    try {
      return cocycle_word(sp, *x.word, *y.word, x.v);
    } catch (const IrreduciblePair&) {
      if (backend == CocycleBackend::kWordOnly) throw;
    }
  }
  if (backend == CocycleBackend::kWordOnly) throw IrreduciblePair();
  return cocycle_leray(sp, x.g, y.g, x.v, AdditiveCharacter(x.v, 1));
}

}  // namespace

MpElement mp_identity(const SympSpace& sp, const Place& v) {
  return MpElement{RatMat::identity(2 * sp.n), 1, v, FactoredWord(sp.n)};
}

MpElement mp_multiply(const SympSpace& sp, const MpElement& x, const MpElement& y,
                      CocycleBackend backend) {
  if (x.v != y.v) throw std::domain_error("mp elements at different places");
  int c = cocycle_eval(sp, x, y, backend);
  MpElement out{x.g * y.g, x.eps * y.eps * c, x.v, std::nullopt};
  if (x.word && y.word) {
    FactoredWord w = *x.word;
    w.append(sp, *y.word);
    w.normalize(sp);
    out.word = std::move(w);
  }
  return out;
}

MpElement mp_invert(const SympSpace& sp, const MpElement& x, CocycleBackend backend) {
  MpElement inv{x.g.inverse(), 1, x.v, std::nullopt};
  if (x.word) inv.word = x.word->inverse(sp);
  int c = cocycle_eval(sp, x, inv, backend);
  inv.eps = x.eps * c;
  return inv;
}

MpElement lift_word(const SympSpace& sp, const FactoredWord& w, const Place& v,
                    CocycleBackend backend) {
  MpElement acc = mp_identity(sp, v);
  for (const auto& l : w.letters()) {
    FactoredWord lw(sp.n);
    if (l.kind == Letter::kParabolic)
      lw.push_parabolic(sp, l.mat);
    else
      lw.push_sigma(l.S);
    MpElement step{lw.product(sp), 1, v, lw};
    acc = mp_multiply(sp, acc, step, backend);
  }
  return acc;
}

MlElement ml_multiply(const MlElement& x, const MlElement& y) {
  if (x.v != y.v) throw std::domain_error("ml elements at different places");
  if (x.a.rows() != y.a.rows()) throw std::domain_error("ml rank mismatch");
  int c = hilbert(x.a.det(), y.a.det(), x.v);
  return MlElement{x.a * y.a, x.eps * y.eps * c, x.v};
}

}  // namespace rao
