#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace cmf {

struct GradedFreeModule {
  std::size_t rank = 0;
  std::vector<int> degrees;
  std::optional<std::vector<Multidegree>> multidegrees;

  GradedFreeModule() = default;
  GradedFreeModule(std::size_t r, std::vector<int> degs,
                   std::optional<std::vector<Multidegree>> mdegs = std::nullopt)
      : rank(r), degrees(std::move(degs)), multidegrees(std::move(mdegs)) {
    if (degrees.size() != rank)
      throw std::invalid_argument("GradedFreeModule: degree list length != rank");
    if (multidegrees && multidegrees->size() != rank)
      throw std::invalid_argument("GradedFreeModule: multidegree list length != rank");
  }

  static GradedFreeModule uniform(std::size_t r, int deg) {
    return GradedFreeModule(r, std::vector<int>(r, deg));
  }
  GradedFreeModule twisted(int shift, const Multidegree* mshift = nullptr) const;
};

// Matrix of polynomials between graded free modules; entry (i,j) is zero
// or homogeneous of degree srcdeg(j) - tgtdeg(i).
class PolyMatrix {
public:
  PolyMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source);

  static PolyMatrix identity(const RingPtr& ring, const GradedFreeModule& m);
  // f * Id with source twisted by deg(f)
  static PolyMatrix scalar(const Polynomial& f, const GradedFreeModule& target);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& source() const { return src_; }
  const GradedFreeModule& target() const { return tgt_; }
  GradedFreeModule& source_mut() { return src_; }
  GradedFreeModule& target_mut() { return tgt_; }
  std::size_t rows() const { return tgt_.rank; }
  std::size_t cols() const { return src_.rank; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  void set(std::size_t i, std::size_t j, Polynomial f);

  bool entries_equal(const PolyMatrix& o) const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool equals_scalar_identity(const Polynomial& f) const;

  // throws when some entry violates the graded-degree invariant
  void check_graded(bool check_multi = true) const;

  PolyMatrix substituted(const std::vector<Polynomial>& images) const;
  PolyMatrix permuted(const std::vector<std::size_t>& row_perm,
                      const std::vector<std::size_t>& col_perm) const;
  PolyMatrix scaled_rows_cols(const std::vector<Coeff>& row_scale,
                              const std::vector<Coeff>& col_scale) const;
  std::vector<std::vector<Coeff>> evaluate(const std::vector<Coeff>& point) const;

private:
  RingPtr ring_;
  GradedFreeModule tgt_, src_;
  std::vector<std::vector<Polynomial>> entries_;
};

struct MatrixFactorization {
  PolyMatrix a;  // linear entries in the Ulrich case
  PolyMatrix b;  // quadratic partner for a cubic f
  Polynomial f;

  void verify() const;  // asserts AB = BA = f * Id exactly
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix block_assemble(const std::vector<std::vector<PolyMatrix>>& layout);

// Basis of {v | d v = 0} with v homogeneous of the forced degrees for a
// new generator in degree column_degree.  When the ring is multigraded
// and d carries multidegrees, kernel columns come out multihomogeneous
// and the returned source module carries their multidegrees.
PolyMatrix graded_kernel(const PolyMatrix& d, int column_degree);

// X with H X = rhs and prescribed entry degrees; by default the solution
// must be unique (free variables, when allowed, are set to zero).
struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
PolyMatrix solve_matrix_equation(const PolyMatrix& h, const PolyMatrix& rhs,
                                 const std::vector<std::vector<int>>& entry_degrees,
                                 bool unique_required = true);

// Nonzero diagonal scalars with D M = N E, or nullopt when inequivalent.
struct DiagonalEquivalence {
  std::vector<Coeff> d;
  std::vector<Coeff> e;
};
std::optional<DiagonalEquivalence> diagonal_equivalence(const PolyMatrix& m,
                                                        const PolyMatrix& n);

// Probabilistic check det(A(pt)) = c * f(pt)^power at sampled points.
struct DetIdentityReport {
  bool consistent = false;
  Coeff c;
  int trials = 0;
};
DetIdentityReport det_identity_check(const PolyMatrix& a, const Polynomial& f, int power,
                                     int trials, std::uint64_t seed);

// Compact grid with a middle dot for zeros; available when every
// entry is 0 or +/- a single variable.
std::optional<std::string> text_grid(const PolyMatrix& m);

}  // namespace cmf
