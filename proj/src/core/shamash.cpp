#include "shamash.hpp"

#include <map>

namespace cmf {

namespace {

const int kGenDeg[6] = {0, 2, 3, 5, 6, 8};

GradedFreeModule twisted_module(const GradedFreeModule& m, int j, const Multidegree& k3) {
  if (j == 0) return m;
  Multidegree sh(k3.size());
  for (std::size_t t = 0; t < k3.size(); ++t) sh[t] = j * k3[t];
  return m.twisted(3 * j, &sh);
}

// entrywise sum of same-shape products, ignoring their module bookkeeping
std::vector<std::vector<Polynomial>> entry_sum(const std::vector<const PolyMatrix*>& ms) {
  const PolyMatrix& first = *ms[0];
  std::vector<std::vector<Polynomial>> out(
      first.rows(), std::vector<Polynomial>(first.cols(), Polynomial::zero(first.ring())));
  for (const PolyMatrix* m : ms) {
    if (m->rows() != first.rows() || m->cols() != first.cols())
      throw std::logic_error("entry_sum: shape mismatch");
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        out[i][j] = out[i][j] + m->at(i, j);
  }
  return out;
}

void expect_scalar(const std::vector<std::vector<Polynomial>>& s, const Polynomial& f,
                   const std::string& what) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s[i].size(); ++j) {
      const Polynomial& want = (i == j) ? f : Polynomial::zero(f.ring());
      if (s[i][j] != want) throw std::logic_error("homotopy relation failed: " + what);
    }
}

}  // namespace

const GradedFreeModule& PureResolution::module(int i) const {
  return i == 0 ? d[0].target() : d[(std::size_t)i - 1].source();
}

const GradedFreeModule& HomotopySystem::module(int i) const {
  return i == 0 ? d[0].target() : d[(std::size_t)i - 1].source();
}

PureResolution pure_resolution(const SpinorQuadrics& q) {
  PureResolution res;
  res.d.push_back(q.generator_row());
  const int degs[4] = {3, 5, 6, 8};
  const std::size_t ranks[4] = {16, 16, 10, 1};
  for (int t = 0; t < 4; ++t) {
    PolyMatrix k = graded_kernel(res.d.back(), degs[t]);
    if (k.cols() != ranks[t])
      throw std::logic_error("pure resolution: rank " + std::to_string(k.cols()) +
                             " at step " + std::to_string(t + 2) + ", expected " +
                             std::to_string(ranks[t]));
    res.d.push_back(std::move(k));
  }
  return res;
}

HomotopySystem higher_homotopies(const PureResolution& res, const Polynomial& f) {
  const RingPtr& r26 = f.ring();
  const RingPtr& r16 = res.d[0].ring();
  if (r26->arity() != 26 || r16->arity() != 16)
    throw std::invalid_argument("higher_homotopies: unexpected rings");

  HomotopySystem hs{f, {}, {}, {}, {}};
  std::vector<Polynomial> emb;
  for (std::size_t v = 0; v < 16; ++v) emb.push_back(Polynomial::variable(r26, (int)v));
  for (const auto& d : res.d) hs.d.push_back(d.substituted(emb));

  auto kf = f.multidegree();
  if (!kf) throw std::invalid_argument("higher_homotopies: cubic not multihomogeneous");

  auto solve_block = [&](const PolyMatrix& h, int src_hom, int tgt_hom, int mult,
                         const std::vector<const PolyMatrix*>& subtract, bool with_f) {
    const GradedFreeModule& dom = hs.module(src_hom);
    PolyMatrix rhs(r26, hs.module(tgt_hom), twisted_module(dom, mult, *kf));
    if (with_f)
      for (std::size_t t = 0; t < dom.rank; ++t) rhs.set(t, t, f);
    for (const PolyMatrix* s : subtract)
      for (std::size_t i = 0; i < rhs.rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
          rhs.set(i, j, rhs.at(i, j) - s->at(i, j));
    rhs.check_graded();
    int e = 3 * mult + kGenDeg[src_hom] - kGenDeg[src_hom + 2 * mult - 1];
    std::vector<std::vector<int>> degs(h.cols(), std::vector<int>(rhs.cols(), e));
    return solve_matrix_equation(h, rhs, degs, /*unique_required=*/false);
  };

  for (int i = 0; i <= 4; ++i) {
    std::vector<const PolyMatrix*> sub;
    PolyMatrix prod = i > 0 ? mat_mul(hs.s1[(std::size_t)i - 1], hs.d[(std::size_t)i - 1])
                            : PolyMatrix(r26, hs.module(0), hs.module(0));
    if (i > 0) sub.push_back(&prod);
    hs.s1.push_back(solve_block(hs.d[(std::size_t)i], i, i, 1, sub, true));
  }
  for (int i = 0; i <= 2; ++i) {
    PolyMatrix p1 = mat_mul(hs.s1[(std::size_t)i + 1], hs.s1[(std::size_t)i]);
    std::vector<const PolyMatrix*> sub{&p1};
    PolyMatrix p2 = i > 0 ? mat_mul(hs.s2[(std::size_t)i - 1], hs.d[(std::size_t)i - 1])
                          : PolyMatrix(r26, hs.module(0), hs.module(0));
    if (i > 0) sub.push_back(&p2);
    // rhs must be negated: d s2 = -(s1 s1 + s2 d)
    PolyMatrix x = solve_block(hs.d[(std::size_t)i + 2], i, i + 2, 2, sub, false);
    hs.s2.push_back(std::move(x));
  }
  {
    PolyMatrix p1 = mat_mul(hs.s1[3], hs.s2[0]);
    PolyMatrix p2 = mat_mul(hs.s2[1], hs.s1[0]);
    hs.s3.push_back(solve_block(hs.d[4], 0, 4, 3, {&p1, &p2}, false));
  }
  hs.check_relations();
  return hs;
}

void HomotopySystem::check_relations() const {
  const RingPtr& ring = f.ring();
  for (int i = 0; i <= 5; ++i) {
    std::vector<PolyMatrix> parts;
    if (i < 5) parts.push_back(mat_mul(d[(std::size_t)i], s1[(std::size_t)i]));
    if (i > 0) parts.push_back(mat_mul(s1[(std::size_t)i - 1], d[(std::size_t)i - 1]));
    std::vector<const PolyMatrix*> ptrs;
    for (auto& p : parts) ptrs.push_back(&p);
    expect_scalar(entry_sum(ptrs), f, "d s1 + s1 d = f at F_" + std::to_string(i));
  }
  Polynomial z = Polynomial::zero(ring);
  for (int i = 0; i <= 3; ++i) {
    std::vector<PolyMatrix> parts;
    parts.push_back(mat_mul(s1[(std::size_t)i + 1], s1[(std::size_t)i]));
    if (i < 3) parts.push_back(mat_mul(d[(std::size_t)i + 2], s2[(std::size_t)i]));
    if (i > 0) parts.push_back(mat_mul(s2[(std::size_t)i - 1], d[(std::size_t)i - 1]));
    std::vector<const PolyMatrix*> ptrs;
    for (auto& p : parts) ptrs.push_back(&p);
    expect_scalar(entry_sum(ptrs), z, "s1 s1 + d s2 + s2 d = 0 at F_" + std::to_string(i));
  }
  {
    PolyMatrix p0 = mat_mul(d[4], s3[0]);
    PolyMatrix p1 = mat_mul(s1[3], s2[0]);
    PolyMatrix p2 = mat_mul(s2[1], s1[0]);
    expect_scalar(entry_sum({&p0, &p1, &p2}), z, "s1 s2 + s2 s1 + d s3 = 0 at F_0");
    PolyMatrix q0 = mat_mul(s1[4], s2[1]);
    PolyMatrix q1 = mat_mul(s2[2], s1[1]);
    PolyMatrix q2 = mat_mul(s3[0], d[0]);
    expect_scalar(entry_sum({&q0, &q1, &q2}), z, "s1 s2 + s2 s1 + s3 d = 0 at F_1");
  }
}

GradedFreeModule shamash_term(const HomotopySystem& hs, int k) {
  if (k < 0 || k > 6) throw std::invalid_argument("shamash_term: k out of range");
  auto kf = *hs.f.multidegree();
  std::vector<int> degs;
  std::vector<Multidegree> mdegs;
  for (int j = 0; 2 * j <= k; ++j) {
    int i = k - 2 * j;
    if (i > 5) continue;
    GradedFreeModule blk = twisted_module(hs.module(i), j, kf);
    degs.insert(degs.end(), blk.degrees.begin(), blk.degrees.end());
    if (blk.multidegrees)
      mdegs.insert(mdegs.end(), blk.multidegrees->begin(), blk.multidegrees->end());
  }
  std::size_t rank = degs.size();
  std::optional<std::vector<Multidegree>> omd;
  if (mdegs.size() == rank) omd = std::move(mdegs);
  return GradedFreeModule(rank, std::move(degs), std::move(omd));
}

PolyMatrix shamash_d(const HomotopySystem& hs, int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("shamash_d: k out of range");
  PolyMatrix out(hs.f.ring(), shamash_term(hs, k - 1), shamash_term(hs, k));

  std::size_t coff = 0;
  for (int j = 0; 2 * j <= k; ++j) {
    int i = k - 2 * j;
    if (i > 5) continue;
    std::size_t roff = 0;
    for (int j2 = 0; 2 * j2 <= k - 1; ++j2) {
      int i2 = k - 1 - 2 * j2;
      if (i2 > 5) continue;
      int m = j - j2;
      const PolyMatrix* blk = nullptr;
      if (m == 0 && i >= 1)
        blk = &hs.d[(std::size_t)i - 1];
      else if (m == 1)
        blk = &hs.s1[(std::size_t)i];
      else if (m == 2)
        blk = &hs.s2[(std::size_t)i];
      else if (m == 3)
        blk = &hs.s3[0];
      if (blk) {
        for (std::size_t r = 0; r < blk->rows(); ++r)
          for (std::size_t c = 0; c < blk->cols(); ++c)
            if (!blk->at(r, c).is_zero()) out.set(roff + r, coff + c, blk->at(r, c));
      }
      roff += hs.module(i2).rank;
    }
    coff += hs.module(i).rank;
  }
  out.check_graded();
  return out;
}

void check_shamash_complex(const HomotopySystem& hs) {
  for (int k = 1; k <= 5; ++k) {
    PolyMatrix prod = mat_mul(shamash_d(hs, k), shamash_d(hs, k + 1));

    // expected: f times the shift dropping block j of term_{k+1} to
    // block j-1 of term_{k-1}
    std::vector<std::vector<Polynomial>> want(
        prod.rows(), std::vector<Polynomial>(prod.cols(), Polynomial::zero(hs.f.ring())));
    std::size_t coff = 0;
    for (int j = 0; 2 * j <= k + 1; ++j) {
      int i = k + 1 - 2 * j;
      if (i > 5) continue;
      if (j >= 1) {
        std::size_t roff = 0;
        for (int j2 = 0; 2 * j2 <= k - 1; ++j2) {
          int i2 = k - 1 - 2 * j2;
          if (i2 > 5) continue;
          if (j2 == j - 1) break;
          roff += hs.module(i2).rank;
        }
        for (std::size_t t = 0; t < hs.module(i).rank; ++t) want[roff + t][coff + t] = hs.f;
      }
      coff += hs.module(i).rank;
    }
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c)
        if (prod.at(r, c) != want[r][c])
          throw std::logic_error("D_" + std::to_string(k) + " D_" + std::to_string(k + 1) +
                                 " differs from f * shift");
  }
}

MatrixFactorization extract_mf(const HomotopySystem& hs) {
  PolyMatrix d6 = shamash_d(hs, 6);
  PolyMatrix rhs = PolyMatrix::scalar(hs.f, d6.target());
  std::vector<std::vector<int>> degs(d6.cols(), std::vector<int>(rhs.cols(), 2));
  PolyMatrix b = solve_matrix_equation(d6, rhs, degs);
  MatrixFactorization mf{std::move(d6), std::move(b), hs.f};
  mf.verify();
  return mf;
}

namespace {

// bijection matching a's multidegrees onto b's after a constant shift
std::vector<std::size_t> shift_match(const std::vector<Multidegree>& a,
                                     const std::vector<Multidegree>& b,
                                     const std::string& what) {
  std::size_t n = a.size();
  if (b.size() != n || n == 0) throw std::invalid_argument("shift_match: size");
  Multidegree shift(a[0].size(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < shift.size(); ++t) shift[t] += b[i][t] - a[i][t];
  for (long& v : shift) {
    if (v % (long)n != 0)
      throw std::runtime_error("match_to_hessian: " + what + " multidegree shift not integral");
    v /= (long)n;
  }
  std::map<Multidegree, std::size_t> loc;
  for (std::size_t i = 0; i < n; ++i)
    if (!loc.emplace(a[i], i).second)
      throw std::runtime_error("match_to_hessian: repeated " + what + " multidegree");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    Multidegree key = b[i];
    for (std::size_t t = 0; t < key.size(); ++t) key[t] -= shift[t];
    auto it = loc.find(key);
    if (it == loc.end())
      throw std::runtime_error("match_to_hessian: unmatched " + what + " multidegree");
    perm[i] = it->second;
  }
  return perm;
}

}  // namespace

HessianMatch match_to_hessian(const PolyMatrix& m, const PolyMatrix& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols())
    throw std::invalid_argument("match_to_hessian: shape mismatch");
  if (!m.target().multidegrees || !m.source().multidegrees || !n.target().multidegrees ||
      !n.source().multidegrees)
    throw std::invalid_argument("match_to_hessian: multidegrees required");

  HessianMatch out{shift_match(*m.target().multidegrees, *n.target().multidegrees, "row"),
                   shift_match(*m.source().multidegrees, *n.source().multidegrees, "column"),
                   {},
                   {},
                   PolyMatrix(m.ring(), m.target(), m.source())};
  PolyMatrix perm = m.permuted(out.row_perm, out.col_perm);
  auto de = diagonal_equivalence(perm, n);
  if (!de) throw std::runtime_error("match_to_hessian: matrices are not diagonally equivalent");
  out.row_scale = de->d;
  for (const Coeff& e : de->e) out.col_scale.push_back(e.inverse());
  out.transformed = perm.scaled_rows_cols(out.row_scale, out.col_scale);
  if (!out.transformed.entries_equal(n))
    throw std::logic_error("match_to_hessian: transformed matrix mismatch");
  return out;
}

}  // namespace cmf
