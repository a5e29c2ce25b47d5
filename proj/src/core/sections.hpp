#pragma once

#include "polymat.hpp"
#include "util.hpp"

namespace cmf {

// Linear substitution sending the 27 variables into z0..zn.
struct LinearSection {
  int n = 0;
  std::uint64_t seed = 0;
  RingPtr ring;                    // z0..zn
  std::vector<Polynomial> images;  // 27 linear forms
};

// Deterministic per seed; coefficients uniform in F_p, or integers in
// [-9, 9] when characteristic is 0.
LinearSection random_section(int n, std::uint64_t seed, unsigned long characteristic);

struct SectionOutput {
  LinearSection section;
  Polynomial f;  // the restricted cubic
  MatrixFactorization mf;
};

struct DegenerateSection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Entrywise substitution into a verified factorization of the 27-variable
// cubic; re-verifies A B = B A = f * Id.  Throws DegenerateSection when
// the substituted cubic vanishes.
SectionOutput restrict_mf(const MatrixFactorization& mf, const LinearSection& sec);

// restrict_mf with bounded seed-bumping retries on degeneracy
SectionOutput section_with_retries(const MatrixFactorization& mf, int n, std::uint64_t seed,
                                   unsigned long characteristic, int max_tries = 8);

// Heuristic (non-certifying): hunts for points of V(f) by fixing all but
// one coordinate and scanning, then tests the gradient there.
struct SmoothnessReport {
  int trials = 0;
  int nonsingular = 0;
  int singular = 0;
  int no_point = 0;  // slices that missed V(f)

  bool all_probes_nonsingular() const { return singular == 0; }
};

SmoothnessReport smoothness_probe(const Polynomial& f, int trials, std::uint64_t seed);

}  // namespace cmf
