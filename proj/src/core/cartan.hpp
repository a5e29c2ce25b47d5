#pragma once

#include "spinor.hpp"

namespace cmf {

// One of the 27 lines on a smooth cubic surface, in the labeling used by
// the variable <-> line table:
//   exceptional {i}, pair {i,j}, complement {i}^c   (1 <= i < j <= 6)
struct LineLabel {
  enum Kind { Exceptional, Pair, Complement };
  Kind kind;
  int i = 0, j = 0;

  Multidegree multidegree() const;
  std::string str() const;
  bool operator==(const LineLabel&) const = default;
};

std::vector<LineLabel> all_lines();                        // 27 labels
LineLabel line_of_var(const std::string& name);
std::string var_of_line(const LineLabel& l);

struct TritangentTriple {
  LineLabel a, b, c;
};

// 30 triples ({i},{j}^c,{i,j}) plus 15 pair partitions of {1..6}
std::vector<TritangentTriple> tritangent_triples();

struct CartanCubic {
  Polynomial f;        // universal cubic, 26 variables
  Polynomial fc;       // Cartan cubic, 27 variables
  SpinorQuadrics quadrics;  // over the 16-variable ring
};

CartanCubic build_cartan(const SpinorQuadrics& q);
CartanCubic build_cartan(unsigned long characteristic = 0);

// Display order of the 27 variables for printed matrices:
// b1..b5, x0, x12, x13, x23, x14, x24, x34, x15, x25, x35, x45,
// a1..a5, y1..y5, w.  Entries are indices into the Cartan ring.
std::vector<std::size_t> hessian_display_order(const RingPtr& ring);

// symmetric 27 x 27 matrix of second partials, in display order
PolyMatrix hessian(const Polynomial& fc);

// quadratic partner Q with H Q = Q H = F_C * Id
MatrixFactorization comatrix(const PolyMatrix& h, const Polynomial& fc);

struct TritangentModel {
  std::vector<TritangentTriple> triples;  // 45
  std::vector<int> signs;                 // +1 / -1 per triple
  Polynomial signed_sum;                  // equals F_C
};

// Matches the 45 triples against the terms of F_C and reads off the
// signs; throws when no sign assignment reproduces F_C.
TritangentModel tritangent_cubic(const Polynomial& fc);

// Lattice of Z-gradings of the 26 variables making every term of F
// isodegree; rows of the result are a canonical (HNF) basis.
IntMat grading_lattice(const Polynomial& f);
// The 27-lines grading restricted to the 26 w-free variables, as 7 rows.
IntMat line_grading_rows_26();

struct CremonaReport {
  bool precheck_ok = false;
  bool identity_a = false;  // F_C(grad F_C) = F_C^2
  bool identity_b = false;  // grad F_C (grad F_C) = F_C * id
};

std::vector<Polynomial> gradient(const Polynomial& fc);
// cheap evaluation pre-check over F_p, then the exact expansion
CremonaReport cremona_check(const Polynomial& fc, unsigned long precheck_prime = 10007,
                            int precheck_points = 10, std::uint64_t seed = 0);

struct PartialCatalogReport {
  std::vector<std::pair<std::string, bool>> checks;  // 27 identities
  bool all_ok() const {
    for (auto& [n, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

// The 27 identities behind the partial-derivative analysis of F_C:
// d/da_i = q_i - b_i w, d/db_i = q_i' - a_i w, d/dw = -sum a_i b_i, and
// the 16 backward-substitution vanishings for the x/y partials.
PartialCatalogReport partial_catalog(const CartanCubic& cc);

}  // namespace cmf
