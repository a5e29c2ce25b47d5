#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shamash.hpp"
#include "util.hpp"

using namespace cmf;

namespace {

constexpr unsigned long kP = 10007;

struct Pipeline {
  CartanCubic cc;
  PureResolution res;
  HomotopySystem hs;
};

Pipeline& pipe() {
  static Pipeline p = [] {
    CartanCubic cc = build_cartan(kP);
    PureResolution res = pure_resolution(cc.quadrics);
    HomotopySystem hs = higher_homotopies(res, cc.f);
    return Pipeline{std::move(cc), std::move(res), std::move(hs)};
  }();
  return p;
}

std::size_t point_rank(const PolyMatrix& m, const std::vector<Coeff>& pt) {
  auto ev = m.evaluate(pt);
  SparseRREF rref(m.cols(), kP);
  for (const auto& row : ev) {
    std::vector<SparseRREF::Entry> e;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) e.push_back({(std::uint32_t)j, row[j]});
    rref.add_row(SparseRREF::make_row(std::move(e)));
  }
  return rref.rank();
}

std::vector<Coeff> random_point(std::size_t n, Rng& rng) {
  std::vector<Coeff> pt;
  for (std::size_t i = 0; i < n; ++i) pt.push_back(Coeff::mod(rng.below(kP), kP));
  return pt;
}

}  // namespace

TEST_CASE("pure resolution: ranks, degrees, and d d = 0") {
  const PureResolution& res = pipe().res;
  std::vector<std::size_t> ranks{1, 10, 16, 16, 10, 1};
  std::vector<int> degs{0, 2, 3, 5, 6, 8};
  for (int i = 0; i <= 5; ++i) {
    CHECK(res.module(i).rank == ranks[(std::size_t)i]);
    for (int d : res.module(i).degrees) CHECK(d == degs[(std::size_t)i]);
  }
  for (int i = 0; i < 4; ++i) CHECK(mat_mul(res.d[(std::size_t)i], res.d[(std::size_t)i + 1]).is_zero());
  // entry degrees alternate 2,1,2,1,2
  for (int i = 0; i < 5; ++i) {
    int want = degs[(std::size_t)i + 1] - degs[(std::size_t)i];
    for (std::size_t r = 0; r < res.d[(std::size_t)i].rows(); ++r)
      for (std::size_t c = 0; c < res.d[(std::size_t)i].cols(); ++c)
        if (!res.d[(std::size_t)i].at(r, c).is_zero())
          CHECK(res.d[(std::size_t)i].at(r, c).degree() == want);
  }
}

TEST_CASE("resolution is exact at random points off the locus") {
  const PureResolution& res = pipe().res;
  Rng rng(89);
  for (int t = 0; t < 3; ++t) {
    std::vector<Coeff> pt = random_point(16, rng);
    for (int i = 0; i < 4; ++i) {
      std::size_t middle = res.module(i + 1).rank;
      CHECK(point_rank(res.d[(std::size_t)i], pt) + point_rank(res.d[(std::size_t)i + 1], pt) ==
            middle);
    }
  }
}

TEST_CASE("higher homotopies satisfy their relations") {
  const HomotopySystem& hs = pipe().hs;
  hs.check_relations();  // throws on violation
  // entry-degree pattern of the first homotopy: 1,2,1,2,1
  std::vector<int> want{1, 2, 1, 2, 1};
  for (int i = 0; i < 5; ++i)
    for (std::size_t r = 0; r < hs.s1[(std::size_t)i].rows(); ++r)
      for (std::size_t c = 0; c < hs.s1[(std::size_t)i].cols(); ++c)
        if (!hs.s1[(std::size_t)i].at(r, c).is_zero())
          CHECK(hs.s1[(std::size_t)i].at(r, c).degree() == want[(std::size_t)i]);
  // first relation spot-checked directly on F_1: d_2 s1 + s1 d_1 = f
  PolyMatrix lhs = mat_mul(hs.d[1], hs.s1[1]);
  PolyMatrix rhs = mat_mul(hs.s1[0], hs.d[0]);
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      Polynomial sum = lhs.at(i, j) + rhs.at(i, j);
      if (i == j)
        CHECK(sum == hs.f);
      else
        CHECK(sum.is_zero());
    }
}

TEST_CASE("induced complex: term ranks and the factorization identity") {
  const HomotopySystem& hs = pipe().hs;
  std::vector<std::size_t> ranks{1, 10, 17, 26, 27, 27, 27};
  for (int k = 0; k <= 6; ++k) CHECK(shamash_term(hs, k).rank == ranks[(std::size_t)k]);
  check_shamash_complex(hs);  // D_k D_{k+1} = f * shift, k = 1..5
}

TEST_CASE("the periodic tail is a rank-27 matrix factorization with linear A") {
  const HomotopySystem& hs = pipe().hs;
  MatrixFactorization mf = extract_mf(hs);
  mf.verify();
  CHECK(mf.a.rows() == 27);
  for (std::size_t i = 0; i < 27; ++i)
    for (std::size_t j = 0; j < 27; ++j) {
      if (!mf.a.at(i, j).is_zero()) CHECK(mf.a.at(i, j).degree() == 1);
      if (!mf.b.at(i, j).is_zero()) CHECK(mf.b.at(i, j).degree() == 2);
    }
  // the partner solved from D_6 B = f * Id is exactly D_5
  PolyMatrix d5 = shamash_d(hs, 5);
  CHECK(mf.b.entries_equal(d5));
  // determinant scaling: det A = c * f^9 at sampled points
  auto rep = det_identity_check(mf.a, hs.f, 9, 5, 101);
  CHECK(rep.consistent);
  CHECK_FALSE(rep.c.is_zero());
}

TEST_CASE("f times any vector lies in the column space of D_6 at points") {
  const HomotopySystem& hs = pipe().hs;
  PolyMatrix d6 = shamash_d(hs, 6);
  Rng rng(97);
  for (int t = 0; t < 3; ++t) {
    std::vector<Coeff> pt = random_point(26, rng);
    auto ev = d6.evaluate(pt);
    Coeff fv = hs.f.evaluate(pt);
    SparseRREF rref(27, kP);
    for (const auto& row : ev) {
      std::vector<SparseRREF::Entry> e;
      for (std::size_t j = 0; j < 27; ++j)
        if (!row[j].is_zero()) e.push_back({(std::uint32_t)j, row[j]});
      rref.add_row(SparseRREF::make_row(std::move(e)));
    }
    std::size_t base = rref.rank();
    // append f * (random vector) as an extra column? equivalent: check
    // that D_6(pt) is invertible when f(pt) != 0, so everything is hit
    if (!fv.is_zero()) CHECK(base == 27);
  }
}

TEST_CASE("A is the Hessian up to permutation and diagonal scaling") {
  const Pipeline& p = pipe();
  MatrixFactorization mf = extract_mf(p.hs);
  PolyMatrix h = hessian(p.cc.fc);
  // restrict the Hessian to w = 0 over the 26-variable ring
  RingPtr r26 = p.cc.f.ring();
  std::vector<Polynomial> img;
  for (int v = 0; v < 26; ++v) img.push_back(Polynomial::variable(r26, v));
  img.push_back(Polynomial::zero(r26));
  PolyMatrix hw0 = h.substituted(img);
  hw0.source_mut().multidegrees = h.source().multidegrees;
  hw0.target_mut().multidegrees = h.target().multidegrees;
  HessianMatch match = match_to_hessian(mf.a, hw0);
  CHECK(match.transformed.entries_equal(hw0));
  CHECK(match.transformed.is_symmetric());
  for (const auto& c : match.row_scale) CHECK_FALSE(c.is_zero());
  for (const auto& c : match.col_scale) CHECK_FALSE(c.is_zero());
  // certificate: the permutation/scaling really carries A onto the target
  CHECK(mf.a.permuted(match.row_perm, match.col_perm)
            .scaled_rows_cols(match.row_scale, match.col_scale)
            .entries_equal(hw0));
}
