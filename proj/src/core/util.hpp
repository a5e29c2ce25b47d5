#pragma once

#include <cstdint>
#include <random>

namespace cmf {

// Deterministic RNG wrapper; identical seeds give identical streams on
// every platform (std::mt19937_64 output is specified, distributions are
// hand-rolled here because the std ones are not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  std::uint64_t below(std::uint64_t m) {
    if (m == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % m;
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace cmf
