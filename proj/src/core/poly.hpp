#pragma once

#include <map>
#include <optional>
#include <vector>

#include "field.hpp"
#include "ring.hpp"

namespace cmf {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Graded reverse-lexicographic, descending (leading term first).
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
      int d = a[i] - b[i];
      if (d != 0) return d < 0;
    }
    return false;
  }
};

// Sparse exact multivariate polynomial.  Immutable value type; no stored
// zero coefficients; terms kept in descending grevlex order.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Coeff, GrevlexGreater>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr& ring, const Coeff& c);
  static Polynomial variable(const RingPtr& ring, int var);
  static Polynomial term(const RingPtr& ring, Monomial m, const Coeff& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned long characteristic() const { return ring_->characteristic; }

  Coeff coeff(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Coeff& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(int var) const;
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Coeff evaluate(const std::vector<Coeff>& point) const;

  // Total degree of a nonzero polynomial; -1 for zero.
  int degree() const;
  bool is_homogeneous(int* deg = nullptr) const;
  // Common multidegree of all terms under the ring's multigrading, or
  // nullopt when terms disagree.  Requires a graded ring.
  std::optional<Multidegree> multidegree() const;
  Multidegree monomial_multidegree(const Monomial& m) const;

  std::string str() const;

  // Internal use by constructors of results: inserts c*m, merging.
  void add_term(const Monomial& m, const Coeff& c);

private:
  RingPtr ring_;
  TermMap terms_;
};

// All monomials of total degree d in canonical (descending grevlex) order.
std::vector<Monomial> monomial_basis(const RingPtr& ring, int degree);

inline Polynomial operator*(const Coeff& c, const Polynomial& f) { return f.scaled(c); }

}  // namespace cmf
