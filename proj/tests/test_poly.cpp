#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsonio.hpp"
#include "poly.hpp"
#include "util.hpp"

using namespace cmf;

namespace {

Polynomial random_poly(const RingPtr& ring, Rng& rng, int maxdeg, int nterms) {
  Polynomial f(ring);
  unsigned long p = ring->characteristic;
  for (int t = 0; t < nterms; ++t) {
    Monomial m(ring->arity(), 0);
    int deg = (int)rng.below((std::uint64_t)maxdeg + 1);
    for (int d = 0; d < deg; ++d) m[(std::size_t)rng.below(ring->arity())] += 1;
    Coeff c = p ? Coeff::mod(rng.below(p), p) : Coeff::integer(rng.range(-50, 50));
    f.add_term(m, c);
  }
  return f;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("ring axioms on random samples") {
  for (unsigned long p : {0UL, 10007UL}) {
    RingPtr ring = make_ring({"x", "y", "z"}, p);
    Rng rng(7 + p);
    for (int it = 0; it < 20; ++it) {
      Polynomial f = random_poly(ring, rng, 3, 4);
      Polynomial g = random_poly(ring, rng, 3, 4);
      Polynomial h = random_poly(ring, rng, 3, 4);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f + (-f) == Polynomial::zero(ring));
      CHECK(f - g == f + (-g));
    }
  }
}

TEST_CASE("differentiation is a derivation") {
  RingPtr ring = make_ring({"x", "y", "z"}, 0);
  Rng rng(11);
  for (int it = 0; it < 20; ++it) {
    Polynomial f = random_poly(ring, rng, 4, 5);
    Polynomial g = random_poly(ring, rng, 4, 5);
    for (int v = 0; v < 3; ++v)
      CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST_CASE("Euler identity for homogeneous polynomials") {
  RingPtr ring = make_ring({"x", "y", "z", "w"}, 0);
  Rng rng(13);
  for (int deg : {1, 2, 3, 5}) {
    Polynomial f(ring);
    for (const auto& m : monomial_basis(ring, deg))
      f.add_term(m, Coeff::integer(rng.range(-5, 5)));
    Polynomial acc = Polynomial::zero(ring);
    for (int v = 0; v < 4; ++v) acc = acc + Polynomial::variable(ring, v) * f.derivative(v);
    CHECK(acc == f.scaled(Coeff::integer(deg)));
  }
}

TEST_CASE("evaluate after substitute equals evaluate at the image point") {
  for (unsigned long p : {0UL, 101UL}) {
    RingPtr src = make_ring({"x", "y"}, p);
    RingPtr dst = make_ring({"u", "v", "t"}, p);
    Rng rng(17 + p);
    for (int it = 0; it < 10; ++it) {
      Polynomial f = random_poly(src, rng, 3, 4);
      std::vector<Polynomial> img{random_poly(dst, rng, 2, 3), random_poly(dst, rng, 2, 3)};
      std::vector<Coeff> pt;
      for (int v = 0; v < 3; ++v)
        pt.push_back(p ? Coeff::mod(rng.below(p), p) : Coeff::integer(rng.range(-4, 4)));
      std::vector<Coeff> imgpt{img[0].evaluate(pt), img[1].evaluate(pt)};
      CHECK(f.substitute(img).evaluate(pt) == f.evaluate(imgpt));
    }
  }
}

TEST_CASE("multidegree is additive on products") {
  RingPtr ring = make_ring({"x", "y"}, 0,
                           std::vector<Multidegree>{{1, 0}, {0, 1}});
  Polynomial f = Polynomial::term(ring, {2, 1}, Coeff::integer(3));
  Polynomial g = Polynomial::term(ring, {0, 4}, Coeff::integer(-2));
  auto mf = f.multidegree(), mg = g.multidegree(), mfg = (f * g).multidegree();
  REQUIRE(mf);
  REQUIRE(mg);
  REQUIRE(mfg);
  CHECK(*mfg == Multidegree{(*mf)[0] + (*mg)[0], (*mf)[1] + (*mg)[1]});
  // mixed terms have no common multidegree
  CHECK_FALSE((f + g).multidegree());
}

TEST_CASE("homogeneity bookkeeping") {
  RingPtr ring = make_ring({"x", "y"}, 0);
  Polynomial f = Polynomial::term(ring, {2, 0}, Coeff::integer(1)) +
                 Polynomial::term(ring, {0, 2}, Coeff::integer(5));
  int d = -1;
  CHECK(f.is_homogeneous(&d));
  CHECK(d == 2);
  CHECK_FALSE((f + Polynomial::variable(ring, 0)).is_homogeneous());
  CHECK(Polynomial::zero(ring).degree() == -1);
}

TEST_CASE("monomial basis size and order") {
  RingPtr ring = make_ring({"x", "y", "z"}, 0);
  for (int d : {0, 1, 2, 3, 4}) {
    auto basis = monomial_basis(ring, d);
    CHECK((long)basis.size() == binom(d + 2, 2));
    GrevlexGreater gt;
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) CHECK(gt(basis[i], basis[i + 1]));
  }
}

TEST_CASE("zero coefficients never stored") {
  RingPtr ring = make_ring({"x"}, 0);
  Polynomial f(ring);
  f.add_term({1}, Coeff::integer(2));
  f.add_term({1}, Coeff::integer(-2));
  CHECK(f.is_zero());
  CHECK(f.term_count() == 0);
}

TEST_CASE("polynomial JSON round trip") {
  for (unsigned long p : {0UL, 10007UL}) {
    RingPtr ring = make_ring({"x", "y"}, p);
    Rng rng(23 + p);
    for (int it = 0; it < 5; ++it) {
      Polynomial f = random_poly(ring, rng, 4, 6);
      Polynomial back = poly_from_json(poly_to_json(f));
      CHECK(back == f);
    }
  }
  // large rationals survive the string form
  RingPtr q = make_ring({"x"}, 0);
  Polynomial f = Polynomial::term(q, {3}, Coeff::rational(mpq_class("123456789012345678901/7")));
  CHECK(poly_from_json(poly_to_json(f)) == f);
}
