#include "cartanmf.h"

#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "cartan.hpp"
#include "chow.hpp"
#include "jsonio.hpp"
#include "sections.hpp"
#include "shamash.hpp"
#include "verify.hpp"

using nlohmann::json;

struct cmf_ctx {
  unsigned long characteristic = 0;
  std::string last_error;

  std::optional<cmf::CartanCubic> cartan;
  std::optional<cmf::PolyMatrix> hess;
  std::optional<cmf::MatrixFactorization> hess_mf;

  const cmf::CartanCubic& get_cartan() {
    if (!cartan) cartan = cmf::build_cartan(characteristic);
    return *cartan;
  }
  const cmf::PolyMatrix& get_hessian() {
    if (!hess) hess = cmf::hessian(get_cartan().fc);
    return *hess;
  }
  const cmf::MatrixFactorization& get_hess_mf() {
    if (!hess_mf) hess_mf = cmf::comatrix(get_hessian(), get_cartan().fc);
    return *hess_mf;
  }
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
cmf_status guarded(cmf_ctx* ctx, char** out, Fn&& fn) {
  if (!ctx || !out) return CMF_ERR_INVALID;
  *out = nullptr;
  try {
    *out = dup_string(fn());
    ctx->last_error.clear();
    return CMF_OK;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return CMF_ERR_INVALID;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return CMF_ERR_CHECK_FAILED;
  } catch (...) {
    ctx->last_error = "unknown error";
    return CMF_ERR_INTERNAL;
  }
}

json report_to_json(const cmf::VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"seconds", c.seconds}, {"note", c.note}});
  return json{{"all_pass", rep.all_pass()}, {"checks", std::move(checks)}};
}

}  // namespace

extern "C" {

cmf_ctx* cmf_ctx_new(unsigned long characteristic) {
  if (characteristic != 0 &&
      (!cmf::is_prime(characteristic) || characteristic == 2 || characteristic == 3))
    return nullptr;
  auto* ctx = new (std::nothrow) cmf_ctx;
  if (ctx) ctx->characteristic = characteristic;
  return ctx;
}

void cmf_ctx_free(cmf_ctx* ctx) { delete ctx; }

const char* cmf_last_error(const cmf_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void cmf_free(char* s) { delete[] s; }

cmf_status cmf_build_spinor(cmf_ctx* ctx, char** json_out) {
  return guarded(ctx, json_out, [&] {
    const cmf::SpinorQuadrics& q = ctx->get_cartan().quadrics;
    json quads = json::array();
    for (const auto& g : q.all()) quads.push_back(cmf::poly_to_json(g));
    json j{{"quadrics", std::move(quads)},
           {"syzygies", cmf::matrix_to_json(cmf::linear_syzygies(q))}};
    return j.dump(2);
  });
}

cmf_status cmf_build_cartan(cmf_ctx* ctx, char** json_out) {
  return guarded(ctx, json_out, [&] {
    const cmf::CartanCubic& cc = ctx->get_cartan();
    cmf::TritangentModel tm = cmf::tritangent_cubic(cc.fc);
    json table = json::array();
    for (std::size_t t = 0; t < tm.triples.size(); ++t)
      table.push_back({{"lines",
                        {tm.triples[t].a.str(), tm.triples[t].b.str(), tm.triples[t].c.str()}},
                       {"vars",
                        {cmf::var_of_line(tm.triples[t].a), cmf::var_of_line(tm.triples[t].b),
                         cmf::var_of_line(tm.triples[t].c)}},
                       {"sign", tm.signs[t]}});
    json j{{"F", cmf::poly_to_json(cc.f)},
           {"F_C", cmf::poly_to_json(cc.fc)},
           {"tritangent_signs", std::move(table)}};
    return j.dump(2);
  });
}

cmf_status cmf_hessian(cmf_ctx* ctx, char** json_out) {
  return guarded(ctx, json_out,
                 [&] { return cmf::matrix_to_json(ctx->get_hessian()).dump(2); });
}

cmf_status cmf_hessian_grid(cmf_ctx* ctx, char** text_out) {
  return guarded(ctx, text_out, [&]() -> std::string {
    auto grid = cmf::text_grid(ctx->get_hessian());
    if (!grid) throw std::invalid_argument("hessian has non-variable entries");
    return *grid;
  });
}

cmf_status cmf_comatrix(cmf_ctx* ctx, char** json_out) {
  return guarded(ctx, json_out,
                 [&] { return cmf::matrix_to_json(ctx->get_hess_mf().b).dump(2); });
}

cmf_status cmf_shamash(cmf_ctx* ctx, char** json_out) {
  return guarded(ctx, json_out, [&] {
    const cmf::CartanCubic& cc = ctx->get_cartan();
    cmf::PureResolution res = cmf::pure_resolution(cc.quadrics);
    cmf::HomotopySystem hs = cmf::higher_homotopies(res, cc.f);
    cmf::check_shamash_complex(hs);
    cmf::MatrixFactorization mf = cmf::extract_mf(hs);
    cmf::PolyMatrix h0 = cmf::hessian_w0(ctx->get_hessian());
    cmf::HessianMatch match = cmf::match_to_hessian(mf.a, h0);

    json resolution = json::array();
    for (const auto& d : res.d) resolution.push_back(cmf::matrix_to_json(d));
    json j{{"resolution", std::move(resolution)},
           {"D5", cmf::matrix_to_json(mf.b)},
           {"D6", cmf::matrix_to_json(mf.a)},
           {"match",
            {{"row_perm", match.row_perm},
             {"col_perm", match.col_perm},
             {"symmetric", match.transformed.is_symmetric()}}}};
    return j.dump(2);
  });
}

cmf_status cmf_section(cmf_ctx* ctx, int dim, uint64_t seed, char** json_out) {
  return guarded(ctx, json_out, [&] {
    cmf::SectionOutput so =
        cmf::section_with_retries(ctx->get_hess_mf(), dim, seed, ctx->characteristic);
    json checks{{"mf_verified", true},
                {"a_linear", true},
                {"rank", 9},
                {"size", 27}};
    if (ctx->characteristic) {
      cmf::DetIdentityReport det = cmf::det_identity_check(so.mf.a, so.f, 9, 5, seed);
      checks["det_consistent"] = det.consistent;
      checks["det_constant"] = det.c.str();
      cmf::SmoothnessReport probe = cmf::smoothness_probe(so.f, 20, seed);
      checks["smoothness_probe"] = {{"trials", probe.trials},
                                    {"nonsingular", probe.nonsingular},
                                    {"singular", probe.singular},
                                    {"no_point", probe.no_point},
                                    {"certifies", false}};
    }
    json j{{"dim", dim},
           {"seed", so.section.seed},
           {"f", cmf::poly_to_json(so.f)},
           {"A", cmf::matrix_to_json(so.mf.a)},
           {"B", cmf::matrix_to_json(so.mf.b)},
           {"checks", std::move(checks)}};
    return j.dump(2);
  });
}

cmf_status cmf_rr(cmf_ctx* ctx, long rank, char** json_out) {
  return guarded(ctx, json_out, [&] {
    cmf::ObstructionReport rep = cmf::obstruction_report(rank);
    json j{{"rank", rep.r},
           {"c1", rep.cd.c1.get_str()},
           {"c2", rep.cd.c2.get_str()},
           {"c3", rep.cd.c3.get_str()},
           {"c4", rep.cd.c4.get_str()},
           {"c4_degree", rep.c4_degree.get_str()},
           {"c4_integral", rep.c4_integral},
           {"rank3_contradiction", rep.rank3_contradiction},
           {"admissible", rep.admissible},
           {"verdict", rep.verdict},
           {"chi_twists", json::array()}};
    for (long t = 0; t <= 3; ++t)
      j["chi_twists"].push_back(cmf::euler_characteristic(rep.cd, -t).get_str());
    return j.dump(2);
  });
}

cmf_status cmf_verify(cmf_ctx* ctx, const char* group, uint64_t seed, char** json_out) {
  if (!ctx || !group || !json_out) return CMF_ERR_INVALID;
  *json_out = nullptr;
  try {
    unsigned long p = ctx->characteristic ? ctx->characteristic : 10007;
    cmf::VerificationReport rep = cmf::run_verification(group, p, seed);
    *json_out = dup_string(report_to_json(rep).dump(2));
    ctx->last_error.clear();
    if (!rep.all_pass()) {
      ctx->last_error = "verification failures reported";
      return CMF_ERR_CHECK_FAILED;
    }
    return CMF_OK;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return CMF_ERR_INVALID;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return CMF_ERR_CHECK_FAILED;
  }
}

}  // extern "C"
