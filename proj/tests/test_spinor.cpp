#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinor.hpp"
#include "util.hpp"

using namespace cmf;

namespace {

// Independent Pfaffian oracle: recursive expansion along the first row,
// pf(M) = sum_j (-1)^j m_{0j} pf(M with rows/cols 0,j removed).
Polynomial pf_oracle(const PolyMatrix& m, std::vector<int> idx) {
  const RingPtr& r = m.ring();
  if (idx.empty()) return Polynomial::constant(r, Coeff::one(r->characteristic));
  Polynomial acc = Polynomial::zero(r);
  int i = idx[0];
  for (std::size_t k = 1; k < idx.size(); ++k) {
    int j = idx[k];
    std::vector<int> rest;
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    Polynomial term = m.at(i, j) * pf_oracle(m, rest);
    acc = (k % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

Polynomial pf_oracle(const PolyMatrix& m) {
  std::vector<int> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
  return pf_oracle(m, idx);
}

}  // namespace

TEST_CASE("sub-Pfaffians match the recursive matching oracle") {
  RingPtr r = spinor_ring(0);
  PolyMatrix p = skew_matrix5(r);
  for (int i = 1; i <= 5; ++i) {
    std::vector<int> idx;
    for (int j = 0; j < 5; ++j)
      if (j != i - 1) idx.push_back(j);
    CHECK(sub_pfaffian(p, i) == pf_oracle(p, idx));
  }
}

TEST_CASE("6x6 Pfaffian matches the oracle and squares to the determinant") {
  // generic skew 6x6 in 15 fresh variables
  std::vector<std::string> vars;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      vars.push_back("m" + std::to_string(i) + std::to_string(j));
  RingPtr r = make_ring(vars, 10007);
  PolyMatrix m(r, GradedFreeModule::uniform(6, 0), GradedFreeModule::uniform(6, 1));
  int v = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      Polynomial x = Polynomial::variable(r, v++);
      m.set(i, j, x);
      m.set(j, i, -x);
    }
  Polynomial pf = pfaffian6(m);
  CHECK(pf == pf_oracle(m));
  CHECK(pf.term_count() == 15);
  // pf^2 = det, checked at random points
  Rng rng(71);
  for (int t = 0; t < 5; ++t) {
    std::vector<Coeff> pt;
    for (std::size_t k = 0; k < r->arity(); ++k) pt.push_back(Coeff::mod(rng.below(10007), 10007));
    auto ev = m.evaluate(pt);
    std::vector<std::vector<unsigned long>> mm(6, std::vector<unsigned long>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) mm[i][j] = ev[i][j].residue();
    Coeff pv = pf.evaluate(pt);
    CHECK(Coeff::mod(det_mod_p(mm, 10007), 10007) == pv * pv);
  }
}

TEST_CASE("the ten quadrics satisfy sum q_i q_i' = 0") {
  for (unsigned long p : {0UL, 10007UL}) {
    SpinorQuadrics q = build_quadrics(p);
    verify_pfaffian_identity(q);
    Polynomial acc = Polynomial::zero(q.q[0].ring());
    for (int i = 0; i < 5; ++i) acc = acc + q.q[i] * q.qprime[i];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("quadric shapes: term counts, degrees, multidegrees") {
  SpinorQuadrics q = build_quadrics(0);
  RingPtr r = q.q[0].ring();
  PolyMatrix p = skew_matrix5(r);
  for (int i = 0; i < 5; ++i) {
    int d = -1;
    CHECK(q.q[i].is_homogeneous(&d));
    CHECK(d == 2);
    CHECK(q.qprime[i].is_homogeneous(&d));
    CHECK(d == 2);
    CHECK(q.q[i].term_count() == 4);   // x0 y_i plus a 3-term sub-Pfaffian
    CHECK(q.qprime[i].term_count() == 4);
    CHECK(q.q[i].multidegree());
    CHECK(q.qprime[i].multidegree());
    // q_i = x0 y_i +- sub_pfaffian(P, i)
    int x0 = r->index_of("x0"), yi = r->index_of("y" + std::to_string(i + 1));
    Polynomial lead = Polynomial::variable(r, x0) * Polynomial::variable(r, yi);
    Polynomial tail = q.q[i] - lead;
    Coeff sign = Coeff::integer(i % 2 == 0 ? 1 : -1);
    CHECK(tail == sub_pfaffian(p, i + 1).scaled(sign));
    // q_i' is the y-row times column i of P
    Polynomial col = Polynomial::zero(r);
    for (int j = 0; j < 5; ++j)
      col = col + Polynomial::variable(r, r->index_of("y" + std::to_string(j + 1))) * p.at(j, i);
    CHECK(q.qprime[i] == col);
  }
}

TEST_CASE("linear syzygies: sixteen of them, all certified") {
  SpinorQuadrics q = build_quadrics(0);
  PolyMatrix syz = linear_syzygies(q);
  CHECK(syz.cols() == 16);
  CHECK(syz.rows() == 10);
  CHECK(mat_mul(q.generator_row(), syz).is_zero());
  syz.check_graded();
  for (std::size_t i = 0; i < syz.rows(); ++i)
    for (std::size_t j = 0; j < syz.cols(); ++j)
      CHECK(syz.at(i, j).degree() <= 1);
}

TEST_CASE("the displayed syzygy among the generators holds") {
  SpinorQuadrics q = build_quadrics(0);
  RingPtr r = q.q[0].ring();
  // x0 q1' + x12 q2 + x13 q3 + x14 q4 + x15 q5 = 0
  auto var = [&](const char* n) { return Polynomial::variable(r, r->index_of(n)); };
  Polynomial s = var("x0") * q.qprime[0] + var("x12") * q.q[1] + var("x13") * q.q[2] +
                 var("x14") * q.q[3] + var("x15") * q.q[4];
  CHECK(s.is_zero());
}

TEST_CASE("ring tower shares the canonical variable order") {
  RingPtr s = spinor_ring(0), c = cubic_ring(0), full = cartan_ring(0);
  REQUIRE(s->arity() == 16);
  REQUIRE(c->arity() == 26);
  REQUIRE(full->arity() == 27);
  for (std::size_t i = 0; i < 16; ++i) CHECK(s->vars[i] == full->vars[i]);
  for (std::size_t i = 0; i < 26; ++i) CHECK(c->vars[i] == full->vars[i]);
  CHECK(full->vars[0] == "x0");
  CHECK(full->vars[26] == "w");
  REQUIRE(full->multigrading);
  for (std::size_t i = 0; i < 27; ++i) {
    CHECK((*full->multigrading)[i] == line_multidegree_of_var(full->vars[i]));
    CHECK((*full->multigrading)[i].size() == 7);
  }
}
