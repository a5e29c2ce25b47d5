#include "cartan.hpp"

#include <algorithm>
#include <stdexcept>

#include "util.hpp"

namespace cmf {

Multidegree LineLabel::multidegree() const {
  Multidegree m(7, 0);  // (L, E1..E6)
  switch (kind) {
    case Exceptional:
      m[i] = 1;
      break;
    case Pair:
      m[0] = 1;
      m[i] = -1;
      m[j] = -1;
      break;
    case Complement:
      m[0] = 2;
      for (int k = 1; k <= 6; ++k) m[k] = -1;
      m[i] += 1;
      break;
  }
  return m;
}

std::string LineLabel::str() const {
  switch (kind) {
    case Exceptional:
      return "{" + std::to_string(i) + "}";
    case Pair:
      return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    default:
      return "{" + std::to_string(i) + "}^c";
  }
}

std::vector<LineLabel> all_lines() {
  std::vector<LineLabel> out;
  for (int i = 1; i <= 6; ++i) out.push_back({LineLabel::Exceptional, i, 0});
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) out.push_back({LineLabel::Pair, i, j});
  for (int i = 1; i <= 6; ++i) out.push_back({LineLabel::Complement, i, 0});
  return out;
}

std::string var_of_line(const LineLabel& l) {
  switch (l.kind) {
    case LineLabel::Exceptional:
      return l.i == 6 ? "x0" : "b" + std::to_string(l.i);
    case LineLabel::Pair:
      if (l.j == 6) return "a" + std::to_string(l.i);
      return "x" + std::to_string(l.i) + std::to_string(l.j);
    default:
      return l.i == 6 ? "w" : "y" + std::to_string(l.i);
  }
}

LineLabel line_of_var(const std::string& name) {
  if (name == "x0") return {LineLabel::Exceptional, 6, 0};
  if (name == "w") return {LineLabel::Complement, 6, 0};
  char c = name[0];
  if (c == 'b') return {LineLabel::Exceptional, name[1] - '0', 0};
  if (c == 'y') return {LineLabel::Complement, name[1] - '0', 0};
  if (c == 'a') return {LineLabel::Pair, name[1] - '0', 6};
  if (c == 'x' && name.size() == 3) return {LineLabel::Pair, name[1] - '0', name[2] - '0'};
  throw std::invalid_argument("line_of_var: " + name);
}

std::vector<TritangentTriple> tritangent_triples() {
  std::vector<TritangentTriple> out;
  // {i}, {j}^c, {i,j}
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      out.push_back({{LineLabel::Exceptional, i, 0},
                     {LineLabel::Complement, j, 0},
                     {LineLabel::Pair, std::min(i, j), std::max(i, j)}});
    }
  // partitions of {1..6} into three pairs
  for (int j = 2; j <= 6; ++j) {
    std::vector<int> rest;
    for (int k = 2; k <= 6; ++k)
      if (k != j) rest.push_back(k);
    // first pair is {1, j}; split the remaining four
    for (int s = 1; s < 4; ++s) {
      int a = rest[0], b = rest[s];
      std::vector<int> last;
      for (int t = 1; t < 4; ++t)
        if (t != s) last.push_back(rest[t]);
      out.push_back({{LineLabel::Pair, 1, j},
                     {LineLabel::Pair, std::min(a, b), std::max(a, b)},
                     {LineLabel::Pair, last[0], last[1]}});
    }
  }
  if (out.size() != 45) throw std::logic_error("tritangent_triples: count");
  return out;
}

CartanCubic build_cartan(const SpinorQuadrics& q) {
  RingPtr r16 = q.q[0].ring();
  unsigned long p = r16->characteristic;
  RingPtr r26 = cubic_ring(p);
  RingPtr r27 = cartan_ring(p);

  std::vector<Polynomial> emb16;
  for (std::size_t i = 0; i < 16; ++i) emb16.push_back(Polynomial::variable(r26, (int)i));

  Polynomial f = Polynomial::zero(r26);
  for (int i = 0; i < 5; ++i) {
    Polynomial ai = Polynomial::variable(r26, r26->index_of("a" + std::to_string(i + 1)));
    Polynomial bi = Polynomial::variable(r26, r26->index_of("b" + std::to_string(i + 1)));
    f = f + q.q[i].substitute(emb16) * ai + q.qprime[i].substitute(emb16) * bi;
  }

  std::vector<Polynomial> emb26;
  for (std::size_t i = 0; i < 26; ++i) emb26.push_back(Polynomial::variable(r27, (int)i));
  Polynomial w = Polynomial::variable(r27, r27->index_of("w"));
  Polynomial ab = Polynomial::zero(r27);
  for (int i = 0; i < 5; ++i) {
    Polynomial ai = Polynomial::variable(r27, r27->index_of("a" + std::to_string(i + 1)));
    Polynomial bi = Polynomial::variable(r27, r27->index_of("b" + std::to_string(i + 1)));
    ab = ab + ai * bi;
  }
  Polynomial fc = f.substitute(emb26) - w * ab;
  return CartanCubic{std::move(f), std::move(fc), q};
}

CartanCubic build_cartan(unsigned long characteristic) {
  return build_cartan(build_quadrics(characteristic));
}

std::vector<std::size_t> hessian_display_order(const RingPtr& ring) {
  static const char* names[] = {"b1",  "b2",  "b3",  "b4",  "b5",  "x0",  "x12",
                                "x13", "x23", "x14", "x24", "x34", "x15", "x25",
                                "x35", "x45", "a1",  "a2",  "a3",  "a4",  "a5",
                                "y1",  "y2",  "y3",  "y4",  "y5",  "w"};
  std::vector<std::size_t> out;
  for (const char* n : names) {
    int k = ring->index_of(n);
    if (k < 0) throw std::invalid_argument("hessian_display_order: missing variable");
    out.push_back((std::size_t)k);
  }
  return out;
}

PolyMatrix hessian(const Polynomial& fc) {
  const RingPtr& ring = fc.ring();
  auto perm = hessian_display_order(ring);
  auto key = fc.multidegree();
  if (!key) throw std::invalid_argument("hessian: input is not multihomogeneous");
  const auto& grading = *ring->multigrading;

  std::vector<int> degs1(27, 1), degs2(27, 2);
  std::vector<Multidegree> tmd, smd;
  for (std::size_t k = 0; k < 27; ++k) {
    tmd.push_back(grading[perm[k]]);
    Multidegree s = *key;
    for (std::size_t t = 0; t < s.size(); ++t) s[t] -= grading[perm[k]][t];
    smd.push_back(std::move(s));
  }
  PolyMatrix h(ring, GradedFreeModule(27, degs1, tmd), GradedFreeModule(27, degs2, smd));
  for (std::size_t i = 0; i < 27; ++i) {
    Polynomial di = fc.derivative((int)perm[i]);
    for (std::size_t j = 0; j < 27; ++j) h.set(i, j, di.derivative((int)perm[j]));
  }
  h.check_graded();
  return h;
}

MatrixFactorization comatrix(const PolyMatrix& h, const Polynomial& fc) {
  PolyMatrix rhs = PolyMatrix::scalar(fc, h.target());
  std::vector<std::vector<int>> degs(27, std::vector<int>(27, 2));
  PolyMatrix q = solve_matrix_equation(h, rhs, degs);
  MatrixFactorization mf{h, q, fc};
  mf.verify();
  return mf;
}

TritangentModel tritangent_cubic(const Polynomial& fc) {
  const RingPtr& ring = fc.ring();
  TritangentModel out{tritangent_triples(), {}, Polynomial::zero(ring)};
  unsigned long p = ring->characteristic;
  Coeff one = p ? Coeff::one(p) : Coeff::integer(1);

  for (const auto& t : out.triples) {
    Monomial m(ring->arity(), 0);
    for (const LineLabel* l : {&t.a, &t.b, &t.c}) {
      int k = ring->index_of(var_of_line(*l));
      if (k < 0) throw std::invalid_argument("tritangent_cubic: wrong ring");
      m[(std::size_t)k] += 1;
    }
    Coeff c = fc.coeff(m);
    int sign;
    if (c == one)
      sign = 1;
    else if (c == -one)
      sign = -1;
    else
      throw std::runtime_error("tritangent_cubic: coefficient of " + t.a.str() + t.b.str() +
                               t.c.str() + " is not +/-1");
    out.signs.push_back(sign);
    out.signed_sum.add_term(m, c);
  }
  if (out.signed_sum != fc)
    throw std::runtime_error("tritangent_cubic: signed sum does not reproduce the cubic");
  return out;
}

IntMat grading_lattice(const Polynomial& f) {
  std::size_t n = f.ring()->arity();
  auto it = f.terms().begin();
  if (it == f.terms().end()) throw std::invalid_argument("grading_lattice: zero polynomial");
  const Monomial& m0 = it->first;
  IntMat diffs;
  for (++it; it != f.terms().end(); ++it) {
    std::vector<mpz_class> row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = it->first[k] - m0[k];
    diffs.push_back(std::move(row));
  }
  return integer_kernel(diffs);
}

IntMat line_grading_rows_26() {
  RingPtr r26 = cubic_ring(0);
  const auto& grading = *r26->multigrading;
  IntMat rows(7, std::vector<mpz_class>(26));
  for (std::size_t v = 0; v < 26; ++v)
    for (std::size_t k = 0; k < 7; ++k) rows[k][v] = grading[v][k];
  return rows;
}

std::vector<Polynomial> gradient(const Polynomial& fc) {
  std::vector<Polynomial> g;
  for (std::size_t v = 0; v < fc.ring()->arity(); ++v) g.push_back(fc.derivative((int)v));
  return g;
}

CremonaReport cremona_check(const Polynomial& fc, unsigned long precheck_prime,
                            int precheck_points, std::uint64_t seed) {
  CremonaReport rep;

  // evaluation pre-check over F_p
  Polynomial fp = fc.characteristic() ? fc : build_cartan(precheck_prime).fc;
  unsigned long p = fp.characteristic();
  auto gp = gradient(fp);
  Rng rng(seed);
  rep.precheck_ok = true;
  for (int t = 0; t < precheck_points; ++t) {
    std::vector<Coeff> pt;
    for (std::size_t v = 0; v < 27; ++v) pt.push_back(Coeff::mod(rng.below(p), p));
    Coeff val = fp.evaluate(pt);
    std::vector<Coeff> img;
    for (auto& g : gp) img.push_back(g.evaluate(pt));
    if (fp.evaluate(img) != val * val) rep.precheck_ok = false;
    for (std::size_t v = 0; v < 27; ++v)
      if (gp[v].evaluate(img) != pt[v] * val) rep.precheck_ok = false;
  }

  // exact expansion
  auto g = gradient(fc);
  rep.identity_a = fc.substitute(g) == fc * fc;
  rep.identity_b = true;
  for (std::size_t v = 0; v < 27; ++v)
    if (g[v].substitute(g) != Polynomial::variable(fc.ring(), (int)v) * fc)
      rep.identity_b = false;
  return rep;
}

PartialCatalogReport partial_catalog(const CartanCubic& cc) {
  PartialCatalogReport rep;
  const Polynomial& fc = cc.fc;
  RingPtr r27 = fc.ring();

  std::vector<Polynomial> emb16;
  for (std::size_t i = 0; i < 16; ++i) emb16.push_back(Polynomial::variable(r27, (int)i));
  std::vector<Polynomial> q27, qp27;
  for (int i = 0; i < 5; ++i) {
    q27.push_back(cc.quadrics.q[i].substitute(emb16));
    qp27.push_back(cc.quadrics.qprime[i].substitute(emb16));
  }
  Polynomial w = Polynomial::variable(r27, r27->index_of("w"));

  for (int i = 0; i < 5; ++i) {
    std::string si = std::to_string(i + 1);
    int ai = r27->index_of("a" + si), bi = r27->index_of("b" + si);
    Polynomial va = Polynomial::variable(r27, ai), vb = Polynomial::variable(r27, bi);
    rep.checks.push_back({"d/da" + si, fc.derivative(ai) == q27[i] - w * vb});
    rep.checks.push_back({"d/db" + si, fc.derivative(bi) == qp27[i] - w * va});
  }
  Polynomial ab = Polynomial::zero(r27);
  for (int i = 0; i < 5; ++i)
    ab = ab + Polynomial::variable(r27, r27->index_of("a" + std::to_string(i + 1))) *
                  Polynomial::variable(r27, r27->index_of("b" + std::to_string(i + 1)));
  rep.checks.push_back({"d/dw", fc.derivative(r27->index_of("w")) == -ab});

  // the remaining sixteen partials vanish under a_i -> q_i', b_i -> q_i,
  // w -> 0 because sum q_i q_i' = 0
  std::vector<Polynomial> back = emb16;
  for (int i = 0; i < 5; ++i) back.push_back(qp27[i]);
  for (int i = 0; i < 5; ++i) back.push_back(q27[i]);
  back.push_back(Polynomial::zero(r27));
  for (std::size_t v = 0; v < 16; ++v)
    rep.checks.push_back(
        {"d/d" + r27->vars[v] + " back-substituted", fc.derivative((int)v).substitute(back).is_zero()});
  return rep;
}

}  // namespace cmf
