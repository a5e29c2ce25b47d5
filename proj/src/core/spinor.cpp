#include "spinor.hpp"

namespace cmf {

namespace {

const std::vector<std::string>& all_vars() {
  static const std::vector<std::string> v = {
      "x0",  "x12", "x13", "x14", "x15", "x23", "x24", "x25", "x34",
      "x35", "x45", "y1",  "y2",  "y3",  "y4",  "y5",  "a1",  "a2",
      "a3",  "a4",  "a5",  "b1",  "b2",  "b3",  "b4",  "b5",  "w"};
  return v;
}

Multidegree line_E(int i) {  // exceptional line {i}, 1 <= i <= 6
  Multidegree d(7, 0);
  d[i] = 1;
  return d;
}
Multidegree line_pair(int i, int j) {  // L - E_i - E_j
  Multidegree d(7, 0);
  d[0] = 1;
  d[i] -= 1;
  d[j] -= 1;
  return d;
}
Multidegree line_complement(int j) {  // 2L - sum E_i + E_j
  Multidegree d(7, -1);
  d[0] = 2;
  d[j] += 1;
  return d;
}

}  // namespace

Multidegree line_multidegree_of_var(const std::string& name) {
  if (name == "x0") return line_E(6);
  if (name == "w") return line_complement(6);
  char c = name[0];
  if (c == 'b') return line_E(name[1] - '0');
  if (c == 'a') return line_pair(name[1] - '0', 6);
  if (c == 'y') return line_complement(name[1] - '0');
  if (c == 'x') return line_pair(name[1] - '0', name[2] - '0');
  throw std::invalid_argument("unknown variable " + name);
}

static RingPtr make_prefix_ring(std::size_t nvars, unsigned long characteristic) {
  std::vector<std::string> vars(all_vars().begin(), all_vars().begin() + nvars);
  std::vector<Multidegree> grading;
  for (const auto& v : vars) grading.push_back(line_multidegree_of_var(v));
  return make_ring(std::move(vars), characteristic, std::move(grading));
}

RingPtr spinor_ring(unsigned long characteristic) {
  static RingPtr q = make_prefix_ring(16, 0);
  if (characteristic == 0) return q;
  return make_prefix_ring(16, characteristic);
}

RingPtr cubic_ring(unsigned long characteristic) {
  static RingPtr q = make_prefix_ring(26, 0);
  if (characteristic == 0) return q;
  return make_prefix_ring(26, characteristic);
}

RingPtr cartan_ring(unsigned long characteristic) {
  static RingPtr q = make_prefix_ring(27, 0);
  if (characteristic == 0) return q;
  return make_prefix_ring(27, characteristic);
}

PolyMatrix skew_matrix5(const RingPtr& ring) {
  GradedFreeModule tgt = GradedFreeModule::uniform(5, 0);
  GradedFreeModule src = GradedFreeModule::uniform(5, 1);
  PolyMatrix p(ring, tgt, src);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      std::string name = "x" + std::to_string(i) + std::to_string(j);
      Polynomial v = Polynomial::variable(ring, ring->index_of(name));
      p.set(i - 1, j - 1, v);
      p.set(j - 1, i - 1, -v);
    }
  return p;
}

Polynomial sub_pfaffian(const PolyMatrix& p, int i) {
  if (p.rows() != 5 || p.cols() != 5) throw std::invalid_argument("sub_pfaffian: need 5x5");
  std::vector<int> keep;
  for (int k = 0; k < 5; ++k)
    if (k != i - 1) keep.push_back(k);
  auto e = [&](int r, int c) { return p.at(keep[r], keep[c]); };
  return e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2);
}

Polynomial pfaffian6(const PolyMatrix& m) {
  if (m.rows() != 6 || m.cols() != 6) throw std::invalid_argument("pfaffian6: need 6x6");
  // expansion along the first row: pf = sum_j (-1)^j m_0j pf(M \ {0,j})
  Polynomial acc = Polynomial::zero(m.ring());
  for (int j = 1; j < 6; ++j) {
    std::vector<int> keep;
    for (int k = 1; k < 6; ++k)
      if (k != j) keep.push_back(k);
    auto e = [&](int r, int c) { return m.at(keep[r], keep[c]); };
    Polynomial sub = e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2);
    Polynomial t = m.at(0, j) * sub;
    acc = (j % 2 == 1) ? acc + t : acc - t;
  }
  return acc;
}

SpinorQuadrics build_quadrics(const PolyMatrix& p) {
  const RingPtr& ring = p.ring();
  SpinorQuadrics out;
  Polynomial x0 = Polynomial::variable(ring, ring->index_of("x0"));
  std::vector<Polynomial> y;
  for (int i = 1; i <= 5; ++i)
    y.push_back(Polynomial::variable(ring, ring->index_of("y" + std::to_string(i))));
  for (int i = 1; i <= 5; ++i) {
    Polynomial pf = sub_pfaffian(p, i);
    out.q.push_back(i % 2 == 1 ? x0 * y[i - 1] + pf : x0 * y[i - 1] - pf);
  }
  for (int i = 0; i < 5; ++i) {
    Polynomial qp = Polynomial::zero(ring);
    for (int j = 0; j < 5; ++j) qp = qp + y[j] * p.at(j, i);
    out.qprime.push_back(std::move(qp));
  }
  return out;
}

SpinorQuadrics build_quadrics(unsigned long characteristic) {
  return build_quadrics(skew_matrix5(spinor_ring(characteristic)));
}

std::vector<Polynomial> SpinorQuadrics::all() const {
  std::vector<Polynomial> v = q;
  v.insert(v.end(), qprime.begin(), qprime.end());
  return v;
}

PolyMatrix SpinorQuadrics::generator_row() const {
  const RingPtr& ring = q[0].ring();
  GradedFreeModule tgt(1, {0}, std::vector<Multidegree>{Multidegree(7, 0)});
  std::vector<Multidegree> mdegs;
  auto quads = all();
  for (const auto& g : quads) {
    auto md = g.multidegree();
    if (!md) throw std::logic_error("spinor quadric not multihomogeneous");
    mdegs.push_back(*md);
  }
  GradedFreeModule src(10, std::vector<int>(10, 2), std::move(mdegs));
  PolyMatrix row(ring, tgt, src);
  for (std::size_t j = 0; j < 10; ++j) row.set(0, j, quads[j]);
  return row;
}

void verify_pfaffian_identity(const SpinorQuadrics& qq) {
  Polynomial acc = Polynomial::zero(qq.q[0].ring());
  for (int i = 0; i < 5; ++i) acc = acc + qq.q[i] * qq.qprime[i];
  if (!acc.is_zero())
    throw std::logic_error("spinor identity sum q_i q_i' = 0 fails (sign convention bug)");
}

PolyMatrix linear_syzygies(const SpinorQuadrics& q) {
  PolyMatrix row = q.generator_row();
  PolyMatrix syz = graded_kernel(row, 3);
  if (syz.cols() != 16)
    throw std::logic_error("linear syzygy space has dimension " +
                           std::to_string(syz.cols()) + ", expected 16");
  return syz;
}

}  // namespace cmf
