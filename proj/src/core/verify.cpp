#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "cartan.hpp"
#include "chow.hpp"
#include "sections.hpp"
#include "shamash.hpp"

namespace cmf {

namespace {

void run_check(std::vector<CheckResult>& out, const std::string& name,
               const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.note = body();  // empty or an informational note; throws on failure
    r.pass = true;
  } catch (const std::exception& e) {
    r.pass = false;
    r.note = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.push_back(std::move(r));
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

// zero, or +/- one variable with unit coefficient
bool pm_variable_entry(const Polynomial& f) {
  if (f.is_zero()) return true;
  if (f.term_count() != 1) return false;
  const auto& [m, c] = *f.terms().begin();
  if (total_degree(m) != 1) return false;
  unsigned long p = f.characteristic();
  Coeff one = p ? Coeff::one(p) : Coeff::integer(1);
  return c == one || c == -one;
}

}  // namespace

PolyMatrix hessian_w0(const PolyMatrix& h) {
  RingPtr r26 = cubic_ring(h.ring()->characteristic);
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < 26; ++v) images.push_back(Polynomial::variable(r26, (int)v));
  images.push_back(Polynomial::zero(r26));
  return h.substituted(images);
}

std::vector<CheckResult> verify_spinor() {
  std::vector<CheckResult> out;
  SpinorQuadrics q = build_quadrics(0);
  run_check(out, "spinor: sum q_i q_i' = 0 over Q", [&] {
    verify_pfaffian_identity(q);
    return "";
  });
  run_check(out, "spinor: linear syzygy space has dimension 16", [&] {
    PolyMatrix syz = linear_syzygies(q);
    require(syz.cols() == 16, "dimension " + std::to_string(syz.cols()));
    PolyMatrix prod = mat_mul(q.generator_row(), syz);
    require(prod.is_zero(), "syzygy columns do not annihilate the quadrics");
    return "";
  });
  return out;
}

std::vector<CheckResult> verify_cartan(unsigned long det_prime, std::uint64_t seed) {
  std::vector<CheckResult> out;
  CartanCubic cc = build_cartan(0UL);
  PolyMatrix h = hessian(cc.fc);
  auto perm = hessian_display_order(cc.fc.ring());

  run_check(out, "cartan: F_C has 45 squarefree +/-1 terms", [&] {
    require(cc.fc.term_count() == 45, "term count " + std::to_string(cc.fc.term_count()));
    for (const auto& [m, c] : cc.fc.terms()) {
      require(total_degree(m) == 3, "non-cubic term");
      for (int e : m) require(e <= 1, "non-squarefree term");
      require(c == Coeff::integer(1) || c == Coeff::integer(-1), "coefficient not +/-1");
    }
    return "";
  });
  run_check(out, "cartan: H symmetric, zero diagonal, entries 0 or +/-variable", [&] {
    require(h.is_symmetric(), "not symmetric");
    for (std::size_t i = 0; i < 27; ++i) {
      require(h.at(i, i).is_zero(), "nonzero diagonal");
      for (std::size_t j = 0; j < 27; ++j)
        require(pm_variable_entry(h.at(i, j)), "entry not 0 or +/-variable");
    }
    return "";
  });
  run_check(out, "cartan: H Q = Q H = F_C Id over Q", [&] {
    comatrix(h, cc.fc);
    return "";
  });
  run_check(out, "cartan: H and H|_{w=0} differ in exactly 10 entries, each -w", [&] {
    PolyMatrix h0 = hessian_w0(h);
    RingPtr r27 = cc.fc.ring();
    std::vector<Polynomial> back;
    for (std::size_t v = 0; v < 26; ++v) back.push_back(Polynomial::variable(r27, (int)v));
    Polynomial mw = -Polynomial::variable(r27, r27->index_of("w"));
    int diffs = 0;
    for (std::size_t i = 0; i < 27; ++i)
      for (std::size_t j = 0; j < 27; ++j)
        if (h0.at(i, j).substitute(back) != h.at(i, j)) {
          require(h.at(i, j) == mw, "differing entry is not -w");
          diffs += 1;
        }
    require(diffs == 10, std::to_string(diffs) + " differing entries");
    return "";
  });
  run_check(out, "cartan: corner 6x6 blocks skew in {x_ij, a_i}", [&] {
    for (bool upper : {true, false}) {
      std::vector<int> seen;
      for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
          const Polynomial& e = upper ? h.at(r, 21 + c) : h.at(21 + r, c);
          const Polynomial& t = upper ? h.at(c, 21 + r) : h.at(21 + c, r);
          require(e == -t, "block not skew");
          if (r < c) {
            require(!e.is_zero() && pm_variable_entry(e), "upper entry not +/-variable");
            for (std::size_t v = 0; v < 27; ++v)
              if (e.terms().begin()->first[v]) seen.push_back((int)v);
          }
        }
      std::sort(seen.begin(), seen.end());
      require(seen.size() == 15 && std::unique(seen.begin(), seen.end()) == seen.end(),
              "entries not 15 distinct variables");
      for (int v : seen) {
        const std::string& name = cc.fc.ring()->vars[(std::size_t)v];
        require(name[0] == 'x' && name != "x0" ? true : name[0] == 'a',
                "unexpected variable " + name);
      }
    }
    return "";
  });
  run_check(out, "cartan: middle 15x15 block = Hessian of corner Pfaffian", [&] {
    PolyMatrix corner(cc.fc.ring(), GradedFreeModule::uniform(6, 0),
                      GradedFreeModule::uniform(6, 1));
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) corner.set(r, c, h.at(21 + r, c));
    Polynomial pf = pfaffian6(corner);
    require(pf.term_count() == 15, "Pfaffian term count");
    for (int r = 0; r < 15; ++r)
      for (int c = 0; c < 15; ++c)
        require(h.at(6 + r, 6 + c) ==
                    pf.derivative((int)perm[6 + r]).derivative((int)perm[6 + c]),
                "middle block differs from the Pfaffian Hessian");
    return "lower-left corner orientation";
  });
  run_check(out, "cartan: 45 tritangent triples with consistent signs; -w a1 b1 negative", [&] {
    TritangentModel tm = tritangent_cubic(cc.fc);
    RingPtr r27 = cc.fc.ring();
    Monomial m(27, 0);
    m[(std::size_t)r27->index_of("w")] = 1;
    m[(std::size_t)r27->index_of("a1")] = 1;
    m[(std::size_t)r27->index_of("b1")] = 1;
    require(cc.fc.coeff(m) == Coeff::integer(-1), "w a1 b1 sign");
    return "";
  });
  run_check(out, "cartan: grading lattice of F has rank 7 and is the 27-lines lattice", [&] {
    IntMat lat = grading_lattice(cc.f);
    require(lat.size() == 7, "rank " + std::to_string(lat.size()));
    require(lattices_equal(lat, line_grading_rows_26()), "lattice differs from 27-lines grading");
    auto md = cc.fc.multidegree();
    require(md && *md == Multidegree{3, -1, -1, -1, -1, -1, -1}, "F_C multidegree");
    return "";
  });
  run_check(out, "cartan: Cremona identities for grad F_C", [&] {
    CremonaReport rep = cremona_check(cc.fc, det_prime, 10, seed);
    require(rep.precheck_ok, "evaluation pre-check failed");
    require(rep.identity_a, "F_C(grad F_C) != F_C^2");
    require(rep.identity_b, "grad F_C(grad F_C) != F_C * id");
    return "";
  });
  run_check(out, "cartan: 27 partial-derivative identities", [&] {
    PartialCatalogReport rep = partial_catalog(cc);
    for (auto& [n, ok] : rep.checks) require(ok, "failed: " + n);
    require(rep.checks.size() == 27, "check count");
    return "";
  });
  run_check(out, "cartan: det H = c * F_C^9 at sampled points", [&] {
    CartanCubic cp = build_cartan(det_prime);
    PolyMatrix hp = hessian(cp.fc);
    DetIdentityReport rep = det_identity_check(hp, cp.fc, 9, 7, seed);
    require(rep.consistent && !rep.c.is_zero(), "inconsistent determinant scaling");
    return "c = " + rep.c.str() + " mod " + std::to_string(det_prime);
  });
  return out;
}

std::vector<CheckResult> verify_shamash(unsigned long prime) {
  std::vector<CheckResult> out;
  CartanCubic cc = build_cartan(prime);
  PureResolution res = pure_resolution(cc.quadrics);

  run_check(out, "shamash: pure resolution ranks (1,10,16,16,10,1), d d = 0", [&] {
    const std::size_t want[6] = {1, 10, 16, 16, 10, 1};
    for (int i = 0; i <= 5; ++i) require(res.module(i).rank == want[i], "rank mismatch");
    for (int i = 0; i + 1 < 5; ++i)
      require(mat_mul(res.d[(std::size_t)i], res.d[(std::size_t)i + 1]).is_zero(),
              "d d != 0");
    return "";
  });

  HomotopySystem hs = higher_homotopies(res, cc.f);
  run_check(out, "shamash: homotopy relations hold exactly", [&] {
    hs.check_relations();
    return "";
  });
  run_check(out, "shamash: term ranks (1,10,17,26,27,27,27)", [&] {
    const std::size_t want[7] = {1, 10, 17, 26, 27, 27, 27};
    for (int k = 0; k <= 6; ++k)
      require(shamash_term(hs, k).rank == want[k],
              "term " + std::to_string(k) + " rank " + std::to_string(shamash_term(hs, k).rank));
    return "";
  });
  run_check(out, "shamash: D_k D_{k+1} = F * shift for k = 1..5", [&] {
    check_shamash_complex(hs);
    return "";
  });

  run_check(out, "shamash: (D_6, partner) is a matrix factorization, D_6 linear", [&] {
    MatrixFactorization mf = extract_mf(hs);
    for (std::size_t i = 0; i < 27; ++i)
      for (std::size_t j = 0; j < 27; ++j)
        require(mf.a.at(i, j).is_zero() || mf.a.at(i, j).degree() == 1, "nonlinear entry");
    PolyMatrix d5 = shamash_d(hs, 5);
    require(mf.b.entries_equal(d5), "partner is not D_5");
    return "";
  });
  run_check(out, "shamash: D_6 matches H|_{w=0} up to permutation and scaling", [&] {
    PolyMatrix h0 = hessian_w0(hessian(build_cartan(prime).fc));
    HessianMatch match = match_to_hessian(shamash_d(hs, 6), h0);
    require(match.transformed.is_symmetric(), "transformed matrix not symmetric");
    for (const Coeff& c : match.row_scale) require(!c.is_zero(), "zero diagonal");
    for (const Coeff& c : match.col_scale) require(!c.is_zero(), "zero diagonal");
    return "";
  });
  return out;
}

std::vector<CheckResult> verify_sections(unsigned long prime, std::uint64_t seed) {
  std::vector<CheckResult> out;
  CartanCubic cc = build_cartan(prime);
  PolyMatrix h = hessian(cc.fc);
  MatrixFactorization base = comatrix(h, cc.fc);
  for (int n = 4; n <= 8; ++n) {
    run_check(out, "sections: dim " + std::to_string(n) + " restriction is a linear MF", [&] {
      SectionOutput so = section_with_retries(base, n, seed + (std::uint64_t)n, prime);
      for (std::size_t i = 0; i < 27; ++i)
        for (std::size_t j = 0; j < 27; ++j)
          require(so.mf.a.at(i, j).is_zero() || so.mf.a.at(i, j).degree() == 1,
                  "nonlinear entry");
      DetIdentityReport rep = det_identity_check(so.mf.a, so.f, 9, 5, seed);
      require(rep.consistent && !rep.c.is_zero(), "det scaling inconsistent");
      return "";
    });
  }
  return out;
}

std::vector<CheckResult> verify_rr() {
  std::vector<CheckResult> out;
  run_check(out, "rr: chi(O_X) = 1", [&] {
    ChernData triv;
    triv.r = 1;
    require(euler_characteristic(triv, 0) == 1, "wrong chi(O_X)");
    return "";
  });
  run_check(out, "rr: closed forms c1 = 0, c2 = r/3, c3 = 0, c4 = r^2/18 - r/2 for r = 1..30", [&] {
    for (long r = 1; r <= 30; ++r) {
      ChernData cd = solve_ulrich_chern(r);
      require(cd.c1 == 0 && cd.c3 == 0, "c1/c3 nonzero");
      require(cd.c2 == mpq_class(r) / 3, "c2 mismatch");
      require(cd.c4 == mpq_class(r) * r / 18 - mpq_class(r) / 2, "c4 mismatch");
      for (long j = 0; j <= 3; ++j)
        require(euler_characteristic(cd, -j) == 0, "twist vanishing fails");
    }
    return "";
  });
  run_check(out, "rr: rank 3 is obstructed with c4 degree -3; conclusion 3 | r, r >= 6", [&] {
    ObstructionReport r3 = obstruction_report(3);
    require(r3.c4_degree == -3 && r3.rank3_contradiction && !r3.admissible, "rank 3 verdict");
    for (long r = 1; r <= 12; ++r) {
      ObstructionReport rep = obstruction_report(r);
      require(rep.c4_integral == (r % 3 == 0), "integrality pattern");
      require(rep.admissible == (r % 3 == 0 && r >= 6), "admissibility pattern");
    }
    return "";
  });
  return out;
}

VerificationReport run_verification(const std::string& group, unsigned long prime,
                                    std::uint64_t seed) {
  VerificationReport rep;
  auto add = [&](std::vector<CheckResult> v) {
    for (auto& c : v) rep.checks.push_back(std::move(c));
  };
  bool all = group == "all";
  if (all || group == "spinor") add(verify_spinor());
  if (all || group == "cartan") add(verify_cartan(prime, seed));
  if (all || group == "shamash") add(verify_shamash(prime));
  if (all || group == "sections") add(verify_sections(prime, seed));
  if (all || group == "rr") add(verify_rr());
  if (rep.checks.empty()) throw std::invalid_argument("unknown verification group: " + group);
  return rep;
}

}  // namespace cmf
