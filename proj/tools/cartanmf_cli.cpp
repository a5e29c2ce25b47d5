#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartanmf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
  unsigned long prime = 10007;
  bool rational = false;
  std::uint64_t seed = 0;
  std::string out;
};

unsigned long env_prime() {
  const char* v = std::getenv("CARTANMF_PRIME");
  return v ? std::strtoul(v, nullptr, 10) : 10007;
}

std::uint64_t env_seed() {
  const char* v = std::getenv("CARTANMF_SEED");
  return v ? std::strtoull(v, nullptr, 10) : 0;
}

int emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload << "\n";
    return kExitOk;
  }
  std::ofstream f(opt.out);
  if (!f) {
    std::cerr << "cannot open " << opt.out << "\n";
    return kExitIo;
  }
  f << payload << "\n";
  return f ? kExitOk : kExitIo;
}

int status_to_exit(cmf_status st) {
  switch (st) {
    case CMF_OK:
      return kExitOk;
    case CMF_ERR_INVALID:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

class Ctx {
public:
  explicit Ctx(const Options& opt) : ctx_(cmf_ctx_new(opt.rational ? 0 : opt.prime)) {}
  ~Ctx() { cmf_ctx_free(ctx_); }
  cmf_ctx* get() const { return ctx_; }
  bool ok() const { return ctx_ != nullptr; }

private:
  cmf_ctx* ctx_;
};

// runs fn(ctx, &out), prints the result or the error
template <typename Fn>
int run_call(const Options& opt, Fn&& fn) {
  Ctx ctx(opt);
  if (!ctx.ok()) {
    std::cerr << "invalid characteristic (need 0 or a prime other than 2, 3)\n";
    return kExitUsage;
  }
  char* out = nullptr;
  cmf_status st = fn(ctx.get(), &out);
  int code = status_to_exit(st);
  if (out) {
    int io = emit(opt, out);
    cmf_free(out);
    if (io != kExitOk) return io;
  }
  if (st != CMF_OK) std::cerr << "error: " << cmf_last_error(ctx.get()) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and checks around the Cartan cubic's rank-9 "
               "linear matrix factorizations"};
  app.require_subcommand(1);

  Options opt;
  opt.prime = env_prime();
  opt.seed = env_seed();
  app.add_option("--prime", opt.prime, "work over F_p (default 10007; env CARTANMF_PRIME)");
  app.add_flag("--rational", opt.rational, "work over the rationals instead of F_p");
  app.add_option("--seed", opt.seed, "RNG seed (default 0; env CARTANMF_SEED)");
  app.add_option("--out", opt.out, "write output to this file instead of stdout");

  auto* build = app.add_subcommand("build", "construct and emit the basic objects");
  build->require_subcommand(1);
  auto* build_spinor = build->add_subcommand("spinor", "ten quadrics and their syzygies");
  auto* build_cartan =
      build->add_subcommand("cartan", "universal cubic, Cartan cubic, sign table");

  auto* hessian = app.add_subcommand("hessian", "27 x 27 Hessian of the Cartan cubic");
  bool hessian_text = false;
  hessian->add_flag("--text", hessian_text, "dot-for-zero text grid instead of JSON");

  auto* comatrix = app.add_subcommand("comatrix", "quadratic partner of the Hessian");
  auto* shamash =
      app.add_subcommand("shamash", "resolution, homotopies, periodic tail, Hessian match");

  auto* section = app.add_subcommand("section", "restrict to a random linear section");
  int dim = 5;
  section->add_option("--dim", dim, "ambient projective dimension, 3..8")->required();

  auto* rr = app.add_subcommand("rr", "Riemann-Roch Chern solve and rank obstruction");
  long rank = 0;
  long scan = 0;
  auto* rank_opt = rr->add_option("--rank", rank, "single rank to analyze");
  rr->add_option("--scan", scan, "tabulate ranks 1..N")->excludes(rank_opt);

  auto* verify = app.add_subcommand("verify", "run verification checks");
  std::string group = "all";
  verify->add_option("group", group, "spinor | cartan | shamash | sections | rr | all");
  bool verify_all = false;
  verify->add_flag("--all", verify_all, "run every group (same as group 'all')");

  for (auto* sub : {build, hessian, comatrix, shamash, section, rr, verify})
    sub->fallthrough();
  for (auto* sub : {build_spinor, build_cartan}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (build_spinor->parsed())
      return run_call(opt, [](cmf_ctx* c, char** o) { return cmf_build_spinor(c, o); });
    if (build_cartan->parsed())
      return run_call(opt, [](cmf_ctx* c, char** o) { return cmf_build_cartan(c, o); });
    if (hessian->parsed())
      return run_call(opt, [&](cmf_ctx* c, char** o) {
        return hessian_text ? cmf_hessian_grid(c, o) : cmf_hessian(c, o);
      });
    if (comatrix->parsed())
      return run_call(opt, [](cmf_ctx* c, char** o) { return cmf_comatrix(c, o); });
    if (shamash->parsed())
      return run_call(opt, [](cmf_ctx* c, char** o) { return cmf_shamash(c, o); });
    if (section->parsed())
      return run_call(opt,
                      [&](cmf_ctx* c, char** o) { return cmf_section(c, dim, opt.seed, o); });
    if (rr->parsed()) {
      if (scan > 0) {
        Ctx ctx(opt);
        if (!ctx.ok()) return kExitUsage;
        nlohmann::json table = nlohmann::json::array();
        for (long r = 1; r <= scan; ++r) {
          char* out = nullptr;
          cmf_status st = cmf_rr(ctx.get(), r, &out);
          if (st != CMF_OK) {
            std::cerr << "error: " << cmf_last_error(ctx.get()) << "\n";
            cmf_free(out);
            return status_to_exit(st);
          }
          table.push_back(nlohmann::json::parse(out));
          cmf_free(out);
        }
        return emit(opt, table.dump(2));
      }
      if (rank < 1) {
        std::cerr << "rr: need --rank r or --scan N\n";
        return kExitUsage;
      }
      return run_call(opt, [&](cmf_ctx* c, char** o) { return cmf_rr(c, rank, o); });
    }
    if (verify->parsed()) {
      if (verify_all) group = "all";
      return run_call(opt, [&](cmf_ctx* c, char** o) {
        return cmf_verify(c, group.c_str(), opt.seed, o);
      });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
