#include "linalg.hpp"

#include <algorithm>
#include <queue>

namespace cmf {

namespace {

// a -= c * b, rows sorted by column
SparseRREF::Row axpy_sub(const SparseRREF::Row& a, const Coeff& c, const SparseRREF::Row& b) {
  SparseRREF::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      Coeff v = a[i].second - c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRREF::Row SparseRREF::make_row(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Row out;
  for (auto& e : entries) {
    if (e.second.is_zero()) continue;
    if (!out.empty() && out.back().first == e.first) {
      Coeff s = out.back().second + e.second;
      if (s.is_zero())
        out.pop_back();
      else
        out.back().second = std::move(s);
    } else {
      out.push_back(std::move(e));
    }
  }
  return out;
}

SparseRREF::Row SparseRREF::reduce_impl(Row row) const {
  // Process columns in increasing order; pivot rows only have entries at
  // columns >= their pivot, so settled columns stay settled.
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
  static thread_local std::vector<Coeff> work;
  static thread_local std::vector<std::uint32_t> touched;
  if (work.size() < ncols_) work.resize(ncols_, Coeff::zero(p_));
  touched.clear();

  auto deposit = [&](std::uint32_t c, const Coeff& v) {
    if (v.is_zero()) return;
    if (work[c].is_zero()) {
      touched.push_back(c);
      work[c] = v;
    } else {
      work[c] = work[c] + v;
    }
    heap.push(c);
  };
  for (auto& [c, v] : row) deposit(c, v);

  Row out;
  std::int64_t last = -1;
  while (!heap.empty()) {
    std::uint32_t c = heap.top();
    heap.pop();
    if (static_cast<std::int64_t>(c) == last) continue;
    last = c;
    if (work[c].is_zero()) continue;
    int r = pivot_of_col_[c];
    if (r < 0) {
      out.emplace_back(c, work[c]);
      continue;
    }
    Coeff coef = work[c];
    work[c] = Coeff::zero(p_);
    const Row& prow = rows_[r];
    for (std::size_t k = 1; k < prow.size(); ++k)
      deposit(prow[k].first, -(coef * prow[k].second));
  }
  for (std::uint32_t c : touched) work[c] = Coeff::zero(p_);
  return out;
}

SparseRREF::Row SparseRREF::reduce(const Row& row) const { return reduce_impl(row); }

bool SparseRREF::add_row(const Row& row) {
  Row rem = reduce_impl(row);
  if (rem.empty()) return false;
  Coeff lead_inv = rem[0].second.inverse();
  for (auto& [c, v] : rem) v = v * lead_inv;
  pivot_of_col_[rem[0].first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(rem));
  finalized_ = false;
  return true;
}

void SparseRREF::finalize() {
  if (finalized_) return;
  // clear entries above each pivot, processing pivots right to left
  std::vector<int> order(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rows_[a][0].first > rows_[b][0].first;
  });
  for (int idx : order) {
    std::uint32_t pc = rows_[idx][0].first;
    for (auto& other : rows_) {
      if (&other == &rows_[idx]) continue;
      if (other[0].first >= pc) continue;
      auto it = std::lower_bound(other.begin(), other.end(), pc,
                                 [](const Entry& e, std::uint32_t c) { return e.first < c; });
      if (it == other.end() || it->first != pc) continue;
      other = axpy_sub(other, it->second, rows_[idx]);
    }
  }
  finalized_ = true;
}

std::vector<SparseRREF::Row> SparseRREF::nullspace() const {
  if (!finalized_) throw std::logic_error("SparseRREF: finalize before nullspace");
  std::vector<Row> basis;
  for (std::uint32_t f = 0; f < ncols_; ++f) {
    if (pivot_of_col_[f] >= 0) continue;
    Row v;
    v.emplace_back(f, Coeff::one(p_));
    for (const auto& r : rows_) {
      auto it = std::lower_bound(r.begin(), r.end(), f,
                                 [](const Entry& e, std::uint32_t c) { return e.first < c; });
      if (it != r.end() && it->first == f) v.emplace_back(r[0].first, -it->second);
    }
    std::sort(v.begin(), v.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

void SparseSystem::add_equation(SparseRREF::Row lhs, Coeff rhs) {
  eqs_.emplace_back(SparseRREF::make_row(std::move(lhs)), std::move(rhs));
}

LinearSolveResult SparseSystem::solve() const {
  // augmented column holds -rhs
  SparseRREF rref(nunknowns_ + 1, p_);
  std::uint32_t aug = static_cast<std::uint32_t>(nunknowns_);
  for (const auto& [lhs, rhs] : eqs_) {
    SparseRREF::Row row = lhs;
    if (!rhs.is_zero()) row.emplace_back(aug, -rhs);
    rref.add_row(row);
  }
  rref.finalize();
  LinearSolveResult res;
  if (rref.pivot_of_col(aug) >= 0) {
    res.solvable = false;
    return res;
  }
  res.solvable = true;
  res.solution.assign(nunknowns_, Coeff::zero(p_));
  std::size_t npivots = 0;
  for (const auto& row : rref.rows()) {
    std::uint32_t pc = row[0].first;
    ++npivots;
    auto it = std::lower_bound(row.begin(), row.end(), aug,
                               [](const SparseRREF::Entry& e, std::uint32_t c) { return e.first < c; });
    if (it != row.end() && it->first == aug) res.solution[pc] = -it->second;
  }
  res.unique = (npivots == nunknowns_);
  return res;
}

std::vector<SparseRREF::Row> SparseSystem::nullspace_sparse() const {
  SparseRREF rref(nunknowns_, p_);
  for (const auto& [lhs, rhs] : eqs_) {
    if (!rhs.is_zero()) throw std::logic_error("nullspace of inhomogeneous system");
    rref.add_row(lhs);
  }
  rref.finalize();
  return rref.nullspace();
}

std::vector<std::vector<Coeff>> SparseSystem::nullspace_dense() const {
  auto sparse = nullspace_sparse();
  std::vector<std::vector<Coeff>> out;
  for (const auto& row : sparse) {
    std::vector<Coeff> v(nunknowns_, Coeff::zero(p_));
    for (const auto& [c, val] : row) v[c] = val;
    out.push_back(std::move(v));
  }
  return out;
}

unsigned long det_mod_p(std::vector<std::vector<unsigned long>> m, unsigned long p) {
  std::size_t n = m.size();
  unsigned long det = 1 % p;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = p - det;
      if (det == p) det = 0;
    }
    unsigned long inv = Coeff::invmod(m[c][c] % p, p);
    det = Coeff::mulmod(det, m[c][c] % p, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] % p == 0) continue;
      unsigned long f = Coeff::mulmod(m[r][c] % p, inv, p);
      for (std::size_t k = c; k < n; ++k) {
        unsigned long sub = Coeff::mulmod(f, m[c][k] % p, p);
        m[r][k] = Coeff::addmod(m[r][k] % p, p - sub, p);
      }
    }
  }
  return det;
}

namespace {

// zero out m[j][c] against m[i][c] by a unimodular row transformation
void gcd_rows(IntMat& m, std::size_t i, std::size_t j, std::size_t c) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[i][c].get_mpz_t(),
             m[j][c].get_mpz_t());
  mpz_class u = -m[j][c] / g, v = m[i][c] / g;
  std::size_t w = m[i].size();
  std::vector<mpz_class> ri(w), rj(w);
  for (std::size_t k = 0; k < w; ++k) {
    ri[k] = s * m[i][k] + t * m[j][k];
    rj[k] = u * m[i][k] + v * m[j][k];
  }
  m[i] = std::move(ri);
  m[j] = std::move(rj);
}

bool row_is_zero(const std::vector<mpz_class>& r, std::size_t upto) {
  for (std::size_t k = 0; k < upto; ++k)
    if (r[k] != 0) return false;
  return true;
}

}  // namespace

IntMat hnf_rows(IntMat m) {
  if (m.empty()) return m;
  std::size_t ncols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t j = r + 1; j < m.size(); ++j)
      if (m[j][c] != 0) gcd_rows(m, r, j, c);
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t j = 0; j < r; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m[j][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = 0; k < ncols; ++k) m[j][k] -= q * m[r][k];
    }
    ++r;
  }
  m.erase(std::remove_if(m.begin(), m.end(),
                         [&](const std::vector<mpz_class>& row) {
                           return row_is_zero(row, ncols);
                         }),
          m.end());
  return m;
}

IntMat integer_kernel(const IntMat& a) {
  std::size_t nrows = a.size();
  std::size_t ncols = nrows == 0 ? 0 : a[0].size();
  // rows of work = [A^T | I]; row-reduce the A^T part
  IntMat work(ncols, std::vector<mpz_class>(nrows + ncols, 0));
  for (std::size_t i = 0; i < ncols; ++i) {
    for (std::size_t j = 0; j < nrows; ++j) work[i][j] = a[j][i];
    work[i][nrows + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < nrows && r < work.size(); ++c) {
    std::size_t piv = r;
    while (piv < work.size() && work[piv][c] == 0) ++piv;
    if (piv == work.size()) continue;
    std::swap(work[r], work[piv]);
    for (std::size_t j = r + 1; j < work.size(); ++j)
      if (work[j][c] != 0) gcd_rows(work, r, j, c);
    ++r;
  }
  IntMat kernel;
  for (const auto& row : work)
    if (row_is_zero(row, nrows))
      kernel.emplace_back(row.begin() + nrows, row.end());
  return hnf_rows(kernel);
}

}  // namespace cmf
