#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace cmf {

// Sparse exact row reduction over the coefficient field (char 0 or F_p).
// Rows are added incrementally; pivots are the leftmost nonzero columns.
// Values are Coeff so one engine serves both fields; systems here are
// small enough that this costs nothing that matters.
class SparseRREF {
public:
  using Entry = std::pair<std::uint32_t, Coeff>;
  using Row = std::vector<Entry>;  // sorted by column

  SparseRREF(std::size_t ncols, unsigned long characteristic)
      : ncols_(ncols), p_(characteristic), pivot_of_col_(ncols, -1) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  unsigned long characteristic() const { return p_; }

  // Reduces the row against the current basis; if a nonzero remainder is
  // left it becomes a new pivot row.  Returns true when the row was
  // independent of the ones seen so far.
  bool add_row(const Row& row);

  // Brings the stored basis to fully reduced form (entries above pivots
  // cleared).  Call once after all rows are added.
  void finalize();

  // Canonical nullspace basis (one vector per free column; the free
  // coordinate is 1).  Requires finalize().
  std::vector<Row> nullspace() const;

  // Reduces b against the basis and returns the remainder.
  Row reduce(const Row& row) const;

  const std::vector<Row>& rows() const { return rows_; }
  int pivot_of_col(std::size_t c) const { return pivot_of_col_[c]; }

  static Row make_row(std::vector<Entry> entries);

private:
  Row reduce_impl(Row row) const;

  std::size_t ncols_;
  unsigned long p_;
  std::vector<Row> rows_;            // normalized: leading coeff 1
  std::vector<int> pivot_of_col_;    // column -> row index, -1 if free
  bool finalized_ = false;
};

// Solution of a sparse linear system A x = b built row by row.
struct LinearSolveResult {
  bool solvable = false;
  bool unique = false;
  std::vector<Coeff> solution;  // particular solution, free coords = 0
};

class SparseSystem {
public:
  SparseSystem(std::size_t nunknowns, unsigned long characteristic)
      : nunknowns_(nunknowns), p_(characteristic) {}

  // One equation: sum coeff_j * x_{col_j} = rhs.
  void add_equation(SparseRREF::Row lhs, Coeff rhs);

  LinearSolveResult solve() const;
  // Canonical basis of the homogeneous solution space (rhs ignored must be 0).
  std::vector<std::vector<Coeff>> nullspace_dense() const;
  std::vector<SparseRREF::Row> nullspace_sparse() const;

  std::size_t nunknowns() const { return nunknowns_; }

private:
  std::size_t nunknowns_;
  unsigned long p_;
  std::vector<std::pair<SparseRREF::Row, Coeff>> eqs_;
};

// Dense determinant over F_p (Gaussian elimination).
unsigned long det_mod_p(std::vector<std::vector<unsigned long>> m, unsigned long p);

// ---- integer lattice utilities (exact, arbitrary precision) ----

using IntMat = std::vector<std::vector<mpz_class>>;

// Canonical row Hermite normal form; zero rows dropped.  Pivots positive,
// entries above pivots reduced into [0, pivot).
IntMat hnf_rows(IntMat m);

// Basis of the integer kernel {x : A x = 0} (rows of the result).  The
// kernel of an integer matrix is a saturated lattice, so this basis
// generates all integer solutions.
IntMat integer_kernel(const IntMat& a);

inline bool lattices_equal(const IntMat& gens_a, const IntMat& gens_b) {
  return hnf_rows(gens_a) == hnf_rows(gens_b);
}

}  // namespace cmf
