#pragma once

#include "rao/character.hpp"
#include "rao/matrix.hpp"
#include "rao/place.hpp"
#include "rao/symplectic.hpp"

#include <optional>
#include <set>
#include <vector>

namespace rao {

// Raised when the rewrite rules cannot reduce a cocycle argument pair.
struct IrreduciblePair : std::runtime_error {
  IrreduciblePair() : std::runtime_error("cocycle word pair is irreducible") {}
};

// A letter of a factored word: either a Siegel-parabolic element (with its
// cached determinant on Y_n) or sigma_S.
struct Letter {
  enum Kind { kParabolic, kSigma } kind;
  RatMat mat;        // parabolic only
  Rational xdet;     // parabolic only: det on Y_n
  std::set<int> S;   // sigma only (1-based)
};

// An Sp element carried as a word in parabolic letters and sigma_S letters.
class FactoredWord {
 public:
  explicit FactoredWord(int n) : n_(n) {}

  int n() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  void push_parabolic(const SympSpace& sp, const RatMat& p);
  void push_sigma(const std::set<int>& S);
  // Re-push an already validated letter.
  void push_raw(const Letter& l) { letters_.push_back(l); }
  void append(const SympSpace& sp, const FactoredWord& w);

  RatMat product(const SympSpace& sp) const;

  // Word for the inverse element (letters inverted in reverse order).
  FactoredWord inverse(const SympSpace& sp) const;

  // Fuse adjacent parabolic letters, drop identity letters; if the shape is
  // not one of (), (P), (s), (P s), (s P), (P s P), refactor through the
  // Bruhat decomposition of the product.
  void normalize(const SympSpace& sp);

 private:
  int n_;
  std::vector<Letter> letters_;
};

// Rao's normalized cocycle evaluated by the rewrite rules (the sigma/sigma
// base case, outer parabolic stripping, parabolic absorption across the
// comma, and the 2-cocycle identity). Throws IrreduciblePair when the rules
// do not reach a base case.
int cocycle_word(const SympSpace& sp, const FactoredWord& w1, const FactoredWord& w2,
                 const Place& v);

// Rao's normalized cocycle from the Maslov form of (Y, g1 Y, g1 g2 Y),
// normalized by beta(g) = [gamma(x(g), psi) gamma(psi)^{|S(g)|}]^{-1}.
// Defined for every pair; psi only enters through a cancelling normalization.
int cocycle_leray(const SympSpace& sp, const RatMat& g1, const RatMat& g2, const Place& v,
                  const AdditiveCharacter& psi);

enum class CocycleBackend { kAuto, kWordOnly, kLeray };

// Element of Mp(W) = Sp(W) x {+-1} at a place, multiplied with Rao's cocycle.
// A factored word is carried when known so products can use the rewrite
// backend; otherwise the Leray backend is used.
struct MpElement {
  RatMat g;
  int eps;
  Place v;
  std::optional<FactoredWord> word;
};

MpElement mp_identity(const SympSpace& sp, const Place& v);
MpElement mp_multiply(const SympSpace& sp, const MpElement& x, const MpElement& y,
                      CocycleBackend backend = CocycleBackend::kAuto);
MpElement mp_invert(const SympSpace& sp, const MpElement& x,
                    CocycleBackend backend = CocycleBackend::kAuto);

// Lift of a word letter by letter with sign +1 per letter.
MpElement lift_word(const SympSpace& sp, const FactoredWord& w, const Place& v,
                    CocycleBackend backend = CocycleBackend::kAuto);

// Element of the cover ML_k = GL_k x {+-1}.
struct MlElement {
  RatMat a;
  int eps;
  Place v;
};

MlElement ml_multiply(const MlElement& x, const MlElement& y);

}  // namespace rao
