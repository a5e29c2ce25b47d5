#pragma once

#include "polymat.hpp"

namespace cmf {

// Canonical variable order shared by the whole construction:
//   x0, x12, x13, x14, x15, x23, x24, x25, x34, x35, x45,
//   y1..y5, a1..a5, b1..b5, w
// The spinor ring takes the first 16, the universal-cubic ring the first
// 26, the Cartan ring all 27.  Every ring carries the restriction of the
// 27-lines Z^7 multigrading.

Multidegree line_multidegree_of_var(const std::string& name);

RingPtr spinor_ring(unsigned long characteristic = 0);   // 16 variables
RingPtr cubic_ring(unsigned long characteristic = 0);    // 26 variables
RingPtr cartan_ring(unsigned long characteristic = 0);   // 27 variables

// generic 5x5 skew matrix in the x_ij
PolyMatrix skew_matrix5(const RingPtr& ring);

// Pfaffian of the 4x4 matrix obtained from P by deleting row/column i
// (1-based); convention m12 m34 - m13 m24 + m14 m23 on the surviving
// upper entries.
Polynomial sub_pfaffian(const PolyMatrix& p, int i);

// Pfaffian of a 6x6 skew matrix (sum over perfect matchings with
// crossing signs).
Polynomial pfaffian6(const PolyMatrix& m);

struct SpinorQuadrics {
  std::vector<Polynomial> q;       // q_i = x0 y_i + (-1)^{i-1} pf(P, i)
  std::vector<Polynomial> qprime;  // q_i' = (y1 .. y5) P_i

  // the 1 x 10 generator row (q1..q5, q1'..q5')
  PolyMatrix generator_row() const;
  std::vector<Polynomial> all() const;
};

SpinorQuadrics build_quadrics(const PolyMatrix& p);
SpinorQuadrics build_quadrics(unsigned long characteristic = 0);

// asserts sum q_i q_i' = 0 exactly
void verify_pfaffian_identity(const SpinorQuadrics& q);

// 10 x 16 matrix of linear forms whose columns are the linear syzygies
// of the ten quadrics; throws when the kernel dimension is not 16.
PolyMatrix linear_syzygies(const SpinorQuadrics& q);

}  // namespace cmf
