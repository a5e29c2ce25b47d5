#include "polymat.hpp"

#include <map>
#include <sstream>

#include "util.hpp"

namespace cmf {

GradedFreeModule GradedFreeModule::twisted(int shift, const Multidegree* mshift) const {
  GradedFreeModule out = *this;
  for (auto& d : out.degrees) d += shift;
  if (out.multidegrees && mshift)
    for (auto& md : *out.multidegrees)
      for (std::size_t k = 0; k < md.size(); ++k) md[k] += (*mshift)[k];
  return out;
}

PolyMatrix::PolyMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source)
    : ring_(std::move(ring)), tgt_(std::move(target)), src_(std::move(source)) {
  entries_.assign(tgt_.rank, std::vector<Polynomial>(src_.rank, Polynomial::zero(ring_)));
}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, const GradedFreeModule& m) {
  PolyMatrix out(ring, m, m);
  for (std::size_t i = 0; i < m.rank; ++i)
    out.entries_[i][i] = Polynomial::constant(ring, Coeff::one(ring->characteristic));
  return out;
}

PolyMatrix PolyMatrix::scalar(const Polynomial& f, const GradedFreeModule& target) {
  int d = f.degree();
  GradedFreeModule src = target.twisted(d < 0 ? 0 : d);
  if (src.multidegrees && f.ring()->multigrading) {
    auto md = f.multidegree();
    if (md)
      for (auto& v : *src.multidegrees)
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += (*md)[k];
  }
  PolyMatrix out(f.ring(), target, src);
  for (std::size_t i = 0; i < target.rank; ++i) out.entries_[i][i] = f;
  return out;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial f) {
  require_same_ring(ring_, f.ring());
  entries_[i][j] = std::move(f);
}

bool PolyMatrix::entries_equal(const PolyMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (entries_[i][j] != o.entries_[i][j]) return false;
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_symmetric() const {
  if (rows() != cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = i + 1; j < cols(); ++j)
      if (entries_[i][j] != entries_[j][i]) return false;
  return true;
}

bool PolyMatrix::equals_scalar_identity(const Polynomial& f) const {
  if (rows() != cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      if (i == j ? entries_[i][j] != f : !entries_[i][j].is_zero()) return false;
    }
  return true;
}

void PolyMatrix::check_graded(bool check_multi) const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const Polynomial& e = entries_[i][j];
      if (e.is_zero()) continue;
      int d;
      if (!e.is_homogeneous(&d) || d != src_.degrees[j] - tgt_.degrees[i])
        throw std::logic_error("PolyMatrix: graded-degree invariant violated at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
      if (check_multi && src_.multidegrees && tgt_.multidegrees && ring_->multigrading) {
        auto md = e.multidegree();
        if (!md) throw std::logic_error("PolyMatrix: entry not multihomogeneous");
        for (std::size_t k = 0; k < md->size(); ++k)
          if ((*md)[k] != (*src_.multidegrees)[j][k] - (*tgt_.multidegrees)[i][k])
            throw std::logic_error("PolyMatrix: multidegree invariant violated");
      }
    }
}

PolyMatrix PolyMatrix::substituted(const std::vector<Polynomial>& images) const {
  RingPtr target_ring = images.at(0).ring();
  PolyMatrix out(target_ring, tgt_, src_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      out.entries_[i][j] = entries_[i][j].substitute(images);
  return out;
}

PolyMatrix PolyMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                const std::vector<std::size_t>& col_perm) const {
  GradedFreeModule t(rows(), std::vector<int>(rows()), tgt_.multidegrees);
  GradedFreeModule s(cols(), std::vector<int>(cols()), src_.multidegrees);
  for (std::size_t i = 0; i < rows(); ++i) {
    t.degrees[i] = tgt_.degrees[row_perm[i]];
    if (t.multidegrees) (*t.multidegrees)[i] = (*tgt_.multidegrees)[row_perm[i]];
  }
  for (std::size_t j = 0; j < cols(); ++j) {
    s.degrees[j] = src_.degrees[col_perm[j]];
    if (s.multidegrees) (*s.multidegrees)[j] = (*src_.multidegrees)[col_perm[j]];
  }
  PolyMatrix out(ring_, t, s);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      out.entries_[i][j] = entries_[row_perm[i]][col_perm[j]];
  return out;
}

PolyMatrix PolyMatrix::scaled_rows_cols(const std::vector<Coeff>& row_scale,
                                        const std::vector<Coeff>& col_scale) const {
  PolyMatrix out(ring_, tgt_, src_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      out.entries_[i][j] = entries_[i][j].scaled(row_scale[i] * col_scale[j]);
  return out;
}

std::vector<std::vector<Coeff>> PolyMatrix::evaluate(const std::vector<Coeff>& point) const {
  std::vector<std::vector<Coeff>> out(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    out[i].reserve(cols());
    for (std::size_t j = 0; j < cols(); ++j) out[i].push_back(entries_[i][j].evaluate(point));
  }
  return out;
}

void MatrixFactorization::verify() const {
  if (!mat_mul(a, b).equals_scalar_identity(f) || !mat_mul(b, a).equals_scalar_identity(f))
    throw std::logic_error("MatrixFactorization: A B = B A = f Id fails");
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  PolyMatrix out(a.ring(), a.target(), b.source());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial acc = Polynomial::zero(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc = acc + a.at(i, k) * b.at(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  return out;
}

PolyMatrix block_assemble(const std::vector<std::vector<PolyMatrix>>& layout) {
  if (layout.empty() || layout[0].empty())
    throw std::invalid_argument("block_assemble: empty layout");
  const RingPtr& ring = layout[0][0].ring();
  std::size_t brows = layout.size(), bcols = layout[0].size();
  for (const auto& r : layout)
    if (r.size() != bcols) throw std::invalid_argument("block_assemble: ragged layout");
  // shape consistency
  for (std::size_t bi = 0; bi < brows; ++bi)
    for (std::size_t bj = 0; bj < bcols; ++bj) {
      if (layout[bi][bj].rows() != layout[bi][0].rows() ||
          layout[bi][bj].cols() != layout[0][bj].cols())
        throw std::invalid_argument("block_assemble: inconsistent block shapes");
      require_same_ring(ring, layout[bi][bj].ring());
    }

  auto concat_modules = [&](bool target) {
    std::vector<int> degs;
    std::optional<std::vector<Multidegree>> mdegs = std::vector<Multidegree>{};
    std::size_t n = target ? brows : bcols;
    for (std::size_t k = 0; k < n; ++k) {
      const GradedFreeModule& m =
          target ? layout[k][0].target() : layout[0][k].source();
      degs.insert(degs.end(), m.degrees.begin(), m.degrees.end());
      if (m.multidegrees && mdegs)
        mdegs->insert(mdegs->end(), m.multidegrees->begin(), m.multidegrees->end());
      else
        mdegs.reset();
    }
    std::size_t rank = degs.size();
    return GradedFreeModule(rank, std::move(degs), std::move(mdegs));
  };

  PolyMatrix out(ring, concat_modules(true), concat_modules(false));
  std::size_t roff = 0;
  for (std::size_t bi = 0; bi < brows; ++bi) {
    std::size_t coff = 0;
    for (std::size_t bj = 0; bj < bcols; ++bj) {
      const PolyMatrix& blk = layout[bi][bj];
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j)
          if (!blk.at(i, j).is_zero()) out.set(roff + i, coff + j, blk.at(i, j));
      coff += blk.cols();
    }
    roff += layout[bi][0].rows();
  }
  return out;
}

namespace {

struct Unknown {
  std::size_t slot;  // row of the unknown column vector
  Monomial mon;
};

// key for grouping equations: (matrix row, product monomial)
using EqKey = std::pair<std::size_t, Monomial>;

}  // namespace

PolyMatrix graded_kernel(const PolyMatrix& d, int column_degree) {
  const RingPtr& ring = d.ring();
  unsigned long p = ring->characteristic;

  std::vector<Unknown> unknowns;
  std::vector<std::size_t> slot_first(d.cols() + 1, 0);
  for (std::size_t j = 0; j < d.cols(); ++j) {
    slot_first[j] = unknowns.size();
    int deg = column_degree - d.source().degrees[j];
    if (deg < 0) continue;
    for (auto& m : monomial_basis(ring, deg)) unknowns.push_back({j, std::move(m)});
  }
  slot_first[d.cols()] = unknowns.size();

  std::map<EqKey, SparseRREF::Row> eqs;
  for (std::size_t j = 0; j < d.cols(); ++j) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      const Polynomial& dij = d.at(i, j);
      if (dij.is_zero()) continue;
      for (std::size_t u = slot_first[j]; u < slot_first[j + 1]; ++u) {
        for (const auto& [tm, tc] : dij.terms()) {
          Monomial pm(tm.size());
          for (std::size_t k = 0; k < pm.size(); ++k) pm[k] = tm[k] + unknowns[u].mon[k];
          eqs[{i, std::move(pm)}].emplace_back(static_cast<std::uint32_t>(u), tc);
        }
      }
    }
  }

  SparseSystem sys(unknowns.size(), p);
  for (auto& [key, row] : eqs) sys.add_equation(std::move(row), Coeff::zero(p));
  auto basis = sys.nullspace_sparse();

  bool graded = ring->multigrading && d.source().multidegrees;
  GradedFreeModule src(basis.size(), std::vector<int>(basis.size(), column_degree),
                       graded ? std::make_optional(std::vector<Multidegree>(basis.size()))
                              : std::nullopt);
  PolyMatrix out(ring, d.source(), src);
  Polynomial probe(ring);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::vector<Polynomial> col(d.cols(), Polynomial::zero(ring));
    for (const auto& [u, c] : basis[b]) col[unknowns[u].slot].add_term(unknowns[u].mon, c);
    for (std::size_t j = 0; j < d.cols(); ++j) out.set(j, b, std::move(col[j]));
    if (graded) {
      const Unknown& lead = unknowns[basis[b][0].first];
      Multidegree md = probe.monomial_multidegree(lead.mon);
      const Multidegree& smd = (*d.source().multidegrees)[lead.slot];
      for (std::size_t k = 0; k < md.size(); ++k) md[k] += smd[k];
      (*src.multidegrees)[b] = std::move(md);
    }
  }
  if (graded) out.source_mut().multidegrees = src.multidegrees;
  return out;
}

PolyMatrix solve_matrix_equation(const PolyMatrix& h, const PolyMatrix& rhs,
                                 const std::vector<std::vector<int>>& entry_degrees,
                                 bool unique_required) {
  require_same_ring(h.ring(), rhs.ring());
  if (h.rows() != rhs.rows())
    throw std::invalid_argument("solve_matrix_equation: shape mismatch");
  const RingPtr& ring = h.ring();
  unsigned long p = ring->characteristic;

  bool graded = ring->multigrading && h.source().multidegrees && rhs.source().multidegrees;

  GradedFreeModule xsrc = rhs.source();
  PolyMatrix x(ring, h.source(), xsrc);
  Polynomial probe(ring);

  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    std::vector<Unknown> unknowns;
    std::vector<std::size_t> slot_first(h.cols() + 1, 0);
    for (std::size_t k = 0; k < h.cols(); ++k) {
      slot_first[k] = unknowns.size();
      int deg = entry_degrees.at(k).at(j);
      if (deg < 0) continue;
      std::optional<Multidegree> want;
      if (graded) {
        want = (*rhs.source().multidegrees)[j];
        const Multidegree& hk = (*h.source().multidegrees)[k];
        for (std::size_t t = 0; t < want->size(); ++t) (*want)[t] -= hk[t];
      }
      for (auto& m : monomial_basis(ring, deg)) {
        if (want && probe.monomial_multidegree(m) != *want) continue;
        unknowns.push_back({k, std::move(m)});
      }
    }
    slot_first[h.cols()] = unknowns.size();

    std::map<EqKey, std::pair<SparseRREF::Row, Coeff>> eqs;
    auto eq_of = [&](std::size_t i, Monomial pm) -> std::pair<SparseRREF::Row, Coeff>& {
      auto it = eqs.find({i, pm});
      if (it == eqs.end())
        it = eqs.emplace(EqKey{i, std::move(pm)},
                         std::make_pair(SparseRREF::Row{}, Coeff::zero(p)))
                 .first;
      return it->second;
    };
    for (std::size_t k = 0; k < h.cols(); ++k) {
      for (std::size_t i = 0; i < h.rows(); ++i) {
        const Polynomial& hik = h.at(i, k);
        if (hik.is_zero()) continue;
        for (std::size_t u = slot_first[k]; u < slot_first[k + 1]; ++u)
          for (const auto& [tm, tc] : hik.terms()) {
            Monomial pm(tm.size());
            for (std::size_t t = 0; t < pm.size(); ++t) pm[t] = tm[t] + unknowns[u].mon[t];
            eq_of(i, std::move(pm)).first.emplace_back(static_cast<std::uint32_t>(u), tc);
          }
      }
    }
    for (std::size_t i = 0; i < rhs.rows(); ++i)
      for (const auto& [m, c] : rhs.at(i, j).terms()) eq_of(i, m).second = c;

    SparseSystem sys(unknowns.size(), p);
    for (auto& [key, eq] : eqs) sys.add_equation(std::move(eq.first), eq.second);
    auto res = sys.solve();
    if (!res.solvable)
      throw SolveError("solve_matrix_equation: no solution at column " + std::to_string(j));
    if (unique_required && !res.unique)
      throw SolveError("solve_matrix_equation: non-unique solution at column " +
                       std::to_string(j));
    std::vector<Polynomial> col(h.cols(), Polynomial::zero(ring));
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (!res.solution[u].is_zero()) col[unknowns[u].slot].add_term(unknowns[u].mon, res.solution[u]);
    for (std::size_t k = 0; k < h.cols(); ++k) x.set(k, j, std::move(col[k]));
  }
  return x;
}

std::optional<DiagonalEquivalence> diagonal_equivalence(const PolyMatrix& m,
                                                        const PolyMatrix& n) {
  require_same_ring(m.ring(), n.ring());
  if (m.rows() != n.rows() || m.cols() != n.cols())
    throw std::invalid_argument("diagonal_equivalence: shape mismatch");
  unsigned long p = m.ring()->characteristic;

  // d_i * M_ij = e_j * N_ij forces supports to agree and entries to be
  // proportional; the scalars then propagate along the bipartite graph
  // of nonzero positions.
  std::vector<std::vector<std::pair<std::size_t, Coeff>>> ratio(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      bool mz = m.at(i, j).is_zero(), nz = n.at(i, j).is_zero();
      if (mz != nz) return std::nullopt;
      if (mz) continue;
      const Coeff& ml = m.at(i, j).terms().begin()->second;
      const Coeff& nl = n.at(i, j).terms().begin()->second;
      Coeff lam = nl / ml;  // need N_ij == lam * M_ij
      if (m.at(i, j).scaled(lam) != n.at(i, j)) return std::nullopt;
      ratio[i].emplace_back(j, std::move(lam));
    }

  std::vector<Coeff> d(m.rows(), Coeff::zero(p)), e(m.cols(), Coeff::zero(p));
  std::vector<bool> dset(m.rows(), false), eset(m.cols(), false);
  for (std::size_t start = 0; start < m.rows(); ++start) {
    if (dset[start]) continue;
    d[start] = Coeff::one(p);
    dset[start] = true;
    std::vector<std::pair<bool, std::size_t>> stack{{true, start}};  // (is_row, idx)
    while (!stack.empty()) {
      auto [is_row, idx] = stack.back();
      stack.pop_back();
      if (is_row) {
        for (const auto& [j, lam] : ratio[idx]) {
          Coeff ej = d[idx] / lam;  // d_i = lam * e_j
          if (!eset[j]) {
            e[j] = ej;
            eset[j] = true;
            stack.emplace_back(false, j);
          } else if (e[j] != ej) {
            return std::nullopt;
          }
        }
      } else {
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (const auto& [j, lam] : ratio[i])
            if (j == idx) {
              Coeff di = lam * e[idx];
              if (!dset[i]) {
                d[i] = di;
                dset[i] = true;
                stack.emplace_back(true, i);
              } else if (d[i] != di) {
                return std::nullopt;
              }
            }
      }
    }
  }
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!eset[j]) e[j] = Coeff::one(p);
  return DiagonalEquivalence{std::move(d), std::move(e)};
}

DetIdentityReport det_identity_check(const PolyMatrix& a, const Polynomial& f, int power,
                                     int trials, std::uint64_t seed) {
  unsigned long p = a.ring()->characteristic;
  if (p == 0)
    throw std::invalid_argument("det_identity_check: needs a prime field");
  if (a.rows() != a.cols()) throw std::invalid_argument("det_identity_check: not square");
  if (f.is_zero()) throw std::invalid_argument("det_identity_check: f = 0");

  Rng rng(seed);
  std::size_t n = a.ring()->arity();
  DetIdentityReport rep;
  std::optional<Coeff> common;
  for (int t = 0; t < trials; ++t) {
    std::vector<Coeff> pt;
    Coeff fv = Coeff::zero(p);
    int attempts = 0;
    do {
      if (++attempts > 200)
        throw std::runtime_error("det_identity_check: degenerate sampling, f vanishes");
      pt.clear();
      for (std::size_t i = 0; i < n; ++i) pt.push_back(Coeff::mod(rng.below(p), p));
      fv = f.evaluate(pt);
    } while (fv.is_zero());

    auto num = a.evaluate(pt);
    std::vector<std::vector<unsigned long>> dm(a.rows(), std::vector<unsigned long>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) dm[i][j] = num[i][j].residue();
    Coeff det = Coeff::mod(det_mod_p(std::move(dm), p), p);
    Coeff denom = Coeff::one(p);
    for (int k = 0; k < power; ++k) denom = denom * fv;
    Coeff ratio = det / denom;
    if (!common)
      common = ratio;
    else if (*common != ratio) {
      rep.consistent = false;
      rep.c = ratio;
      rep.trials = t + 1;
      return rep;
    }
  }
  rep.consistent = true;
  rep.c = *common;
  rep.trials = trials;
  return rep;
}

std::optional<std::string> text_grid(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Polynomial& e = m.at(i, j);
      if (e.is_zero()) {
        cells[i][j] = "·";
        continue;
      }
      if (e.term_count() != 1) return std::nullopt;
      const auto& [mon, c] = *e.terms().begin();
      if (total_degree(mon) != 1) return std::nullopt;
      std::size_t var = 0;
      for (std::size_t k = 0; k < mon.size(); ++k)
        if (mon[k] == 1) var = k;
      std::string s;
      if (c.is_one())
        s = m.ring()->vars[var];
      else if ((-c).is_one())
        s = "-" + m.ring()->vars[var];
      else
        return std::nullopt;
      width = std::max(width, s.size());
      cells[i][j] = std::move(s);
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::size_t pad = width + 1 - (cells[i][j] == "·" ? 1 : cells[i][j].size());
      os << std::string(pad, ' ') << cells[i][j];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cmf
