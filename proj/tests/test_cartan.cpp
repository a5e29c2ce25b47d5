#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan.hpp"
#include "util.hpp"

using namespace cmf;

namespace {

CartanCubic& cubic() {
  static CartanCubic cc = build_cartan(0UL);
  return cc;
}

PolyMatrix& hess() {
  static PolyMatrix h = hessian(cubic().fc);
  return h;
}

}  // namespace

TEST_CASE("the universal cubic has 40 terms, the Cartan cubic 45") {
  const CartanCubic& cc = cubic();
  CHECK(cc.f.term_count() == 40);
  CHECK(cc.fc.term_count() == 45);
  int d = -1;
  CHECK(cc.fc.is_homogeneous(&d));
  CHECK(d == 3);
  // every coefficient is +-1 and every term is squarefree
  for (const auto& [m, c] : cc.fc.terms()) {
    CHECK((c == Coeff::integer(1) || c == Coeff::integer(-1)));
    for (int e : m) CHECK(e <= 1);
  }
}

TEST_CASE("setting w = 0 in the Cartan cubic recovers the universal cubic") {
  const CartanCubic& cc = cubic();
  RingPtr r26 = cc.f.ring();
  std::vector<Polynomial> img;
  for (std::size_t v = 0; v < 26; ++v) img.push_back(Polynomial::variable(r26, (int)v));
  img.push_back(Polynomial::zero(r26));
  CHECK(cc.fc.substitute(img) == cc.f);
}

TEST_CASE("line labels biject with the 27 variables") {
  auto lines = all_lines();
  REQUIRE(lines.size() == 27);
  RingPtr r = cartan_ring(0);
  std::vector<std::string> seen;
  for (const auto& l : lines) {
    std::string v = var_of_line(l);
    CHECK(line_of_var(v) == l);
    CHECK(r->index_of(v) >= 0);
    CHECK(l.multidegree() == line_multidegree_of_var(v));
    seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("tritangent triples reproduce the cubic with signs") {
  const CartanCubic& cc = cubic();
  TritangentModel tm = tritangent_cubic(cc.fc);
  REQUIRE(tm.triples.size() == 45);
  REQUIRE(tm.signs.size() == 45);
  CHECK(tm.signed_sum == cc.fc);
  // oracle: the signed sum evaluated at random points equals F_C there
  RingPtr r = cc.fc.ring();
  Rng rng(73);
  for (int t = 0; t < 5; ++t) {
    std::vector<Coeff> pt;
    for (std::size_t v = 0; v < 27; ++v)
      pt.push_back(Coeff::rational(mpq_class(rng.range(-7, 7))));
    Coeff total = Coeff::integer(0);
    for (std::size_t k = 0; k < 45; ++k) {
      const auto& tr = tm.triples[k];
      Coeff prod = Coeff::integer(tm.signs[k]);
      for (const auto& l : {tr.a, tr.b, tr.c})
        prod = prod * pt[(std::size_t)r->index_of(var_of_line(l))];
      total = total + prod;
    }
    CHECK(total == cc.fc.evaluate(pt));
  }
  // the w a1 b1 term carries sign -1
  for (std::size_t k = 0; k < 45; ++k) {
    std::vector<std::string> names{var_of_line(tm.triples[k].a), var_of_line(tm.triples[k].b),
                                   var_of_line(tm.triples[k].c)};
    std::sort(names.begin(), names.end());
    if (names == std::vector<std::string>{"a1", "b1", "w"}) CHECK(tm.signs[k] == -1);
  }
}

TEST_CASE("Hessian: symmetric, zero diagonal, entries signed variables") {
  const PolyMatrix& h = hess();
  REQUIRE(h.rows() == 27);
  REQUIRE(h.cols() == 27);
  CHECK(h.is_symmetric());
  RingPtr r = h.ring();
  int offdiag_nonzero = 0;
  for (std::size_t i = 0; i < 27; ++i) {
    CHECK(h.at(i, i).is_zero());
    for (std::size_t j = 0; j < 27; ++j) {
      const Polynomial& e = h.at(i, j);
      if (e.is_zero()) continue;
      ++offdiag_nonzero;
      REQUIRE(e.term_count() == 1);
      const auto& [m, c] = *e.terms().begin();
      CHECK((c == Coeff::integer(1) || c == Coeff::integer(-1)));
      int total = 0;
      for (int x : m) total += x;
      CHECK(total == 1);
    }
  }
  CHECK(offdiag_nonzero == 45 * 6);  // each cubic term contributes six entries
}

TEST_CASE("Hessian rows/columns follow the display order") {
  const PolyMatrix& h = hess();
  RingPtr r = h.ring();
  auto order = hessian_display_order(r);
  REQUIRE(order.size() == 27);
  CHECK(r->vars[order[0]] == "b1");
  CHECK(r->vars[order[5]] == "x0");
  CHECK(r->vars[order[6]] == "x12");
  CHECK(r->vars[order[16]] == "a1");
  CHECK(r->vars[order[21]] == "y1");
  CHECK(r->vars[order[26]] == "w");
  // spot checks against the printed matrix: H(b1, x12) = -y2, H(b1, a1) = -w
  auto entry = [&](const char* rowv, const char* colv) {
    std::size_t ri = 0, ci = 0;
    for (std::size_t k = 0; k < 27; ++k) {
      if (r->vars[order[k]] == rowv) ri = k;
      if (r->vars[order[k]] == colv) ci = k;
    }
    return h.at(ri, ci);
  };
  auto var = [&](const char* n) { return Polynomial::variable(r, r->index_of(n)); };
  CHECK(entry("b1", "x12") == -var("y2"));
  CHECK(entry("b1", "a1") == -var("w"));
  CHECK(entry("x0", "y1") == var("a1"));
  // oracle: entries are second partials of F_C in display order
  const CartanCubic& cc = cubic();
  Rng rng(79);
  for (int t = 0; t < 3; ++t) {
    std::size_t i = rng.below(27), j = rng.below(27);
    CHECK(h.at(i, j) == cc.fc.derivative((int)order[i]).derivative((int)order[j]));
  }
}

TEST_CASE("comatrix gives an exact matrix factorization of the cubic") {
  const CartanCubic& cc = cubic();
  MatrixFactorization mf = comatrix(hess(), cc.fc);
  mf.verify();
  CHECK(mf.b.is_symmetric());
  for (std::size_t i = 0; i < 27; ++i)
    for (std::size_t j = 0; j < 27; ++j)
      if (!mf.b.at(i, j).is_zero()) CHECK(mf.b.at(i, j).degree() == 2);
  CHECK(mat_mul(mf.a, mf.b).equals_scalar_identity(cc.fc));
  CHECK(mat_mul(mf.b, mf.a).equals_scalar_identity(cc.fc));
}

TEST_CASE("grading lattice of the universal cubic is the 27-lines lattice") {
  const CartanCubic& cc = cubic();
  IntMat lat = grading_lattice(cc.f);
  CHECK(lat.size() == 7);
  CHECK(lattices_equal(lat, line_grading_rows_26()));
  // F_C itself is multihomogeneous of multidegree (3,-1,...,-1)
  auto md = cc.fc.multidegree();
  REQUIRE(md);
  CHECK(*md == Multidegree{3, -1, -1, -1, -1, -1, -1});
}

TEST_CASE("Cremona identities hold exactly") {
  CremonaReport rep = cremona_check(cubic().fc);
  CHECK(rep.precheck_ok);
  CHECK(rep.identity_a);
  CHECK(rep.identity_b);
}

TEST_CASE("gradient substitution oracle for the Cremona identity") {
  // independent spot check over F_p: F_C(grad F_C(pt)) = F_C(pt)^2
  CartanCubic cc = build_cartan(10007UL);
  auto g = gradient(cc.fc);
  Rng rng(83);
  for (int t = 0; t < 10; ++t) {
    std::vector<Coeff> pt;
    for (int v = 0; v < 27; ++v) pt.push_back(Coeff::mod(rng.below(10007), 10007));
    std::vector<Coeff> gp;
    for (const auto& gi : g) gp.push_back(gi.evaluate(pt));
    Coeff fv = cc.fc.evaluate(pt);
    CHECK(cc.fc.evaluate(gp) == fv * fv);
  }
}

TEST_CASE("partial-derivative catalog: all 27 identities") {
  PartialCatalogReport rep = partial_catalog(cubic());
  CHECK(rep.checks.size() == 27);
  CHECK(rep.all_ok());
  // independent recomputation of one family: d F_C / d a_i = q_i - w b_i
  const CartanCubic& cc = cubic();
  RingPtr r = cc.fc.ring();
  std::vector<Polynomial> emb;
  for (std::size_t v = 0; v < 16; ++v) emb.push_back(Polynomial::variable(r, (int)v));
  for (int i = 1; i <= 5; ++i) {
    Polynomial qi = cc.quadrics.q[i - 1].substitute(emb);
    auto var = [&](const std::string& n) { return Polynomial::variable(r, r->index_of(n)); };
    CHECK(cc.fc.derivative(r->index_of("a" + std::to_string(i))) ==
          qi - var("w") * var("b" + std::to_string(i)));
  }
}
