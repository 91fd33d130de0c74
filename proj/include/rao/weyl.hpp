#pragma once

#include "rao/cocycle.hpp"
#include "rao/matrix.hpp"
#include "rao/symplectic.hpp"

#include <vector>

namespace rao {

// Signed permutation (hyperoctahedral group, Weyl group of type C_n):
// e_i -> sign[i] e_{perm[i]}, 0-based.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPerm identity(int n);
  bool operator==(const SignedPerm& o) const { return perm == o.perm && sign == o.sign; }
};

SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b);  // a after b

// Simple reflection s_i (1-based): i < n swaps coordinates i, i+1;
// s_n flips the sign of coordinate n.
SignedPerm simple_reflection(int n, int i);

// A word in simple reflections, 1-based letters.
using ReducedWord = std::vector<int>;

SignedPerm word_to_perm(int n, const ReducedWord& w);

// Coxeter length: positive roots of type C_n sent to negative roots.
int coxeter_length(const SignedPerm& w);

// The representative w_T of the nontrivial relative Weyl element of the
// maximal Levi GL_k x Sp(2(n-k)) as the reduced word
// r_k q_1 r_k q_2 ... q_{k-1} r_k.
ReducedWord wM_word(int n, int k);

struct RootVector {
  RatMat mat;
  int index;       // 1-based simple root index
  bool positive;
};

// Simple root vectors X_{alpha_i} of Sp(2n) and X_{beta_i} of SO(2n+1) in the
// standard bases; negative vectors are solved from the coroot bracket
// condition [X_alpha, X_{-alpha}] = H with [H, X_alpha] = 2 X_alpha.
RootVector root_vector_sp(const SympSpace& sp, int i, bool positive);
RootVector root_vector_so(int n, int i, bool positive);

// Exact exp of a nilpotent matrix.
RatMat exp_nilpotent(const RatMat& x);

// exp(X_alpha) exp(-X_{-alpha}) exp(X_alpha)
RatMat sp_reflection_rep(const SympSpace& sp, int i);
RatMat so_reflection_rep(int n, int i);

// Langlands-Shelstad representative of a reduced word: the Mp product of the
// per-letter representatives lifted with sign +1 (symplectic side), or the
// plain matrix product (orthogonal side).
MpElement ls_representative_sp(const SympSpace& sp, const ReducedWord& w, const Place& v,
                               CocycleBackend backend = CocycleBackend::kAuto);
RatMat ls_representative_so(int n, const ReducedWord& w);

// The explicit representatives w'_M (with its sign (-1,-1)^{k(k-1)/2}) and w'_L.
MpElement target_representative_sp(const SympSpace& sp, int k, const Place& v);
RatMat target_representative_so(int n, int k);

}  // namespace rao
