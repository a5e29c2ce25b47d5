#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cartanmf.h>

using nlohmann::json;

namespace {

json call(cmf_ctx* ctx, cmf_status (*fn)(cmf_ctx*, char**)) {
  char* out = nullptr;
  REQUIRE(fn(ctx, &out) == CMF_OK);
  REQUIRE(out != nullptr);
  json j = json::parse(out);
  cmf_free(out);
  return j;
}

}  // namespace

TEST_CASE("context creation validates the characteristic") {
  CHECK(cmf_ctx_new(4) == nullptr);   // composite
  CHECK(cmf_ctx_new(2) == nullptr);   // excluded small primes
  CHECK(cmf_ctx_new(3) == nullptr);
  cmf_ctx* ok = cmf_ctx_new(0);
  REQUIRE(ok != nullptr);
  cmf_ctx_free(ok);
  cmf_ctx* okp = cmf_ctx_new(10007);
  REQUIRE(okp != nullptr);
  cmf_ctx_free(okp);
}

TEST_CASE("spinor and cartan payloads have the advertised shape") {
  cmf_ctx* ctx = cmf_ctx_new(0);
  REQUIRE(ctx);
  json sp = call(ctx, cmf_build_spinor);
  CHECK(sp["quadrics"].size() == 10);
  CHECK(sp["syzygies"]["cols"] == 16);
  json ca = call(ctx, cmf_build_cartan);
  CHECK(ca["F_C"]["terms"].size() == 45);
  CHECK(ca["F"]["terms"].size() == 40);
  CHECK(ca["tritangent_signs"].size() == 45);
  cmf_ctx_free(ctx);
}

TEST_CASE("hessian, grid, and comatrix round trip through the C surface") {
  cmf_ctx* ctx = cmf_ctx_new(0);
  REQUIRE(ctx);
  json h = call(ctx, cmf_hessian);
  CHECK(h["rows"] == 27);
  CHECK(h["cols"] == 27);
  char* grid = nullptr;
  REQUIRE(cmf_hessian_grid(ctx, &grid) == CMF_OK);
  REQUIRE(grid != nullptr);
  CHECK(std::string(grid).find("-y2") != std::string::npos);
  cmf_free(grid);
  json q = call(ctx, cmf_comatrix);
  CHECK(q["rows"] == 27);
  cmf_ctx_free(ctx);
}

TEST_CASE("shamash pipeline over a prime field") {
  cmf_ctx* ctx = cmf_ctx_new(10007);
  REQUIRE(ctx);
  json s = call(ctx, cmf_shamash);
  CHECK(s["resolution"].size() == 5);
  CHECK(s["D6"]["rows"] == 27);
  CHECK(s["D5"]["rows"] == 27);
  CHECK(s["match"]["symmetric"] == true);
  CHECK(s["match"]["row_perm"].size() == 27);
  cmf_ctx_free(ctx);
}

TEST_CASE("sections: valid dims succeed, invalid dims are rejected") {
  cmf_ctx* ctx = cmf_ctx_new(10007);
  REQUIRE(ctx);
  char* out = nullptr;
  REQUIRE(cmf_section(ctx, 4, 7, &out) == CMF_OK);
  json j = json::parse(out);
  cmf_free(out);
  CHECK(j["dim"] == 4);
  CHECK(j["checks"]["mf_verified"] == true);
  CHECK(j["checks"]["det_consistent"] == true);
  out = nullptr;
  CHECK(cmf_section(ctx, 9, 7, &out) == CMF_ERR_INVALID);
  CHECK(out == nullptr);
  CHECK(std::string(cmf_last_error(ctx)).size() > 0);
  cmf_ctx_free(ctx);
}

TEST_CASE("rr endpoint reports the rank-3 contradiction") {
  cmf_ctx* ctx = cmf_ctx_new(0);
  REQUIRE(ctx);
  char* out = nullptr;
  REQUIRE(cmf_rr(ctx, 3, &out) == CMF_OK);
  json j = json::parse(out);
  cmf_free(out);
  CHECK(j["rank"] == 3);
  CHECK(j["rank3_contradiction"] == true);
  CHECK(j["admissible"] == false);
  out = nullptr;
  REQUIRE(cmf_rr(ctx, 6, &out) == CMF_OK);
  json j6 = json::parse(out);
  cmf_free(out);
  CHECK(j6["admissible"] == true);
  CHECK(cmf_rr(ctx, 0, &out) == CMF_ERR_INVALID);
  cmf_ctx_free(ctx);
}

TEST_CASE("verify endpoint returns a full passing report") {
  cmf_ctx* ctx = cmf_ctx_new(0);
  REQUIRE(ctx);
  char* out = nullptr;
  REQUIRE(cmf_verify(ctx, "rr", 0, &out) == CMF_OK);
  json j = json::parse(out);
  cmf_free(out);
  CHECK(j["all_pass"] == true);
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
  out = nullptr;
  CHECK(cmf_verify(ctx, "nonsense", 0, &out) == CMF_ERR_INVALID);
  cmf_ctx_free(ctx);
}
