#pragma once

#include "cartan.hpp"

namespace cmf {

// Pure free resolution of the ten-quadric ideal over the 16-variable
// ring: ranks (1,10,16,16,10,1), generator degrees (0;2;3;5;6;8).
struct PureResolution {
  std::vector<PolyMatrix> d;  // d[i] is d_{i+1}, i = 0..4

  const GradedFreeModule& module(int i) const;  // F_i, i = 0..5
};

PureResolution pure_resolution(const SpinorQuadrics& q);

// System of higher homotopies for the cubic f = sum q_i a_i + q_i' b_i
// over the 26-variable ring: s0 = d, s1: F_i -> F_{i+1} (i = 0..4),
// s2: F_i -> F_{i+3} (i = 0..2), s3: F_0 -> F_5, satisfying
//   s0 s1 + s1 s0 = f          s1 s1 + s0 s2 + s2 s0 = 0
//   s1 s2 + s2 s1 + s0 s3 + s3 s0 = 0
struct HomotopySystem {
  Polynomial f;
  std::vector<PolyMatrix> d;   // base-changed d_1..d_5
  std::vector<PolyMatrix> s1;  // 5 blocks
  std::vector<PolyMatrix> s2;  // 3 blocks
  std::vector<PolyMatrix> s3;  // 1 block

  const GradedFreeModule& module(int i) const;
  void check_relations() const;  // throws on any violated relation
};

HomotopySystem higher_homotopies(const PureResolution& res, const Polynomial& f);

// k-th term of the induced complex over the hypersurface:
// term_k = sum_j F_{k-2j}(-3j); ranks (1,10,17,26,27,27,27) for k = 0..6.
GradedFreeModule shamash_term(const HomotopySystem& hs, int k);
PolyMatrix shamash_d(const HomotopySystem& hs, int k);  // D_k, k = 1..6

// D_k D_{k+1} = f * (block down-shift) for k = 1..5; throws otherwise.
void check_shamash_complex(const HomotopySystem& hs);

// the periodic tail: A = D_6 (linear), B = its quadratic partner
MatrixFactorization extract_mf(const HomotopySystem& hs);

// Permutation + diagonal scaling carrying m onto n, found by matching
// the Z^7 multidegrees of rows and columns (up to a constant shift) and
// then propagating entry ratios; throws when inequivalent.
struct HessianMatch {
  std::vector<std::size_t> row_perm, col_perm;
  std::vector<Coeff> row_scale, col_scale;
  PolyMatrix transformed;  // entrywise equal to n
};

HessianMatch match_to_hessian(const PolyMatrix& m, const PolyMatrix& n);

}  // namespace cmf
