#pragma once

#include <string>
#include <vector>

#include "polymat.hpp"

namespace cmf {

struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string note;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<CheckResult> verify_spinor();
std::vector<CheckResult> verify_cartan(unsigned long det_prime, std::uint64_t seed);
std::vector<CheckResult> verify_shamash(unsigned long prime);
std::vector<CheckResult> verify_sections(unsigned long prime, std::uint64_t seed);
std::vector<CheckResult> verify_rr();

// group: spinor | cartan | shamash | sections | rr | all
VerificationReport run_verification(const std::string& group, unsigned long prime,
                                    std::uint64_t seed);

// restriction w -> 0 viewed over the 26-variable ring
PolyMatrix hessian_w0(const PolyMatrix& h);

}  // namespace cmf
