#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chow.hpp"

using namespace cmf;

namespace {

mpq_class q(long num, long den) { return mpq_class(num) / den; }

}  // namespace

TEST_CASE("Chow class arithmetic: ring axioms with truncation") {
  ChowClass a{{1, 2, 3, 4, 5}};
  ChowClass b{{-1, 0, 7, q(1, 2), 0}};
  ChowClass c{{0, 1, 0, 0, 2}};
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  // truncation: H^3 * H^2 = 0
  ChowClass h3{{0, 0, 0, 1, 0}}, h2{{0, 0, 1, 0, 0}};
  CHECK(h3 * h2 == ChowClass{});
  CHECK((h2 * h2).c[4] == 1);
  CHECK((h2 * h2).degree() == 3);
}

TEST_CASE("line bundle Chern character matches the exponential") {
  for (long j = -4; j <= 4; ++j) {
    ChernData cd{1, mpq_class(j), 0, 0, 0};
    CHECK(chern_character(cd) == ChowClass::exp_line(j));
  }
  // exp_line term by term for j = 2: (1, 2, 2, 4/3, 2/3)
  ChowClass e = ChowClass::exp_line(2);
  CHECK(e.c[0] == 1);
  CHECK(e.c[1] == 2);
  CHECK(e.c[2] == 2);
  CHECK(e.c[3] == q(4, 3));
  CHECK(e.c[4] == q(2, 3));
}

TEST_CASE("chi of the structure sheaf is 1") {
  ChernData triv{1, 0, 0, 0, 0};
  CHECK(euler_characteristic(triv, 0) == 1);
  // and the Todd-weight class is (1, 3/2, 5/4, 3/4, 1/3)
  ChowClass rr = rr_class();
  CHECK(rr.c[0] == 1);
  CHECK(rr.c[1] == q(3, 2));
  CHECK(rr.c[2] == q(5, 4));
  CHECK(rr.c[3] == q(3, 4));
  CHECK(rr.c[4] == q(1, 3));
}

TEST_CASE("twist series of a line bundle O(j): chi compatible with exp") {
  // chi(O(j)) = deg(exp(jH) * rr)_4; sanity chi(O(1)) and chi(O(-1))
  ChernData triv{1, 0, 0, 0, 0};
  mpq_class chi1 = euler_characteristic(triv, 1);
  ChowClass by_hand = ChowClass::exp_line(1) * rr_class();
  CHECK(chi1 == by_hand.degree());
  CHECK(chi1 == 6);  // h^0 of the hyperplane class on a cubic fourfold
  CHECK(euler_characteristic(triv, -1) == 0);
  CHECK(euler_characteristic(triv, -2) == 0);
  // the canonical class is O(-3), so chi(O(-3)) = chi(O) by duality
  CHECK(euler_characteristic(triv, -3) == 1);
}

TEST_CASE("the Ulrich Chern data: closed forms and twist vanishings") {
  for (long r = 1; r <= 30; ++r) {
    ChernData cd = solve_ulrich_chern(r);
    CHECK(cd.c1 == 0);
    CHECK(cd.c3 == 0);
    CHECK(cd.c2 == mpq_class(r) / 3);
    CHECK(cd.c4 == mpq_class(r) * r / 18 - mpq_class(r) / 2);
    for (long j = 0; j <= 3; ++j) CHECK(euler_characteristic(cd, -j) == 0);
    // Hilbert values of an Ulrich sheaf: chi(F(t)) = 3r * C(t+3, 4) / ... =
    // 3r t(t+1)(t+2)(t+3)/24; check t = 1..4
    for (long t = 1; t <= 4; ++t)
      CHECK(euler_characteristic(cd, t) ==
            mpq_class(3 * r) * t * (t + 1) * (t + 2) * (t + 3) / 24);
  }
}

TEST_CASE("obstruction verdicts by rank") {
  for (long r = 1; r <= 12; ++r) {
    ObstructionReport rep = obstruction_report(r);
    CHECK(rep.r == r);
    CHECK(rep.c4_degree == mpq_class(r) * r / 6 - mpq_class(3 * r) / 2);
    CHECK(rep.c4_integral == (r % 3 == 0));
    CHECK(rep.admissible == (r % 3 == 0 && r >= 6));
    if (r == 3) {
      CHECK(rep.rank3_contradiction);
      CHECK(rep.c4_degree == -3);
    }
    CHECK_FALSE(rep.verdict.empty());
  }
  CHECK(obstruction_report(6).admissible);
  CHECK_FALSE(obstruction_report(9).rank3_contradiction);
}
