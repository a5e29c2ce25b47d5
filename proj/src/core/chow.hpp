#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace cmf {

// Truncated Chow class c0 + c1 H + c2 H^2 + c3 H^3 + c4 H^4 on a cubic
// fourfold; products truncate above H^4 and the degree map uses H^4 = 3.
struct ChowClass {
  std::array<mpq_class, 5> c{};

  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator-(const ChowClass& o) const;
  ChowClass operator*(const ChowClass& o) const;
  bool operator==(const ChowClass& o) const { return c == o.c; }

  mpq_class degree() const { return 3 * c[4]; }  // integral of the H^4 part

  static ChowClass scalar(const mpq_class& v);
  static ChowClass exp_line(const mpq_class& j);  // exp(j H)
};

// Todd-weighted Riemann-Roch kernel: chi(E) = [ch(E) * rr_class()]_4
ChowClass rr_class();

struct ChernData {
  long r = 0;          // rank
  mpq_class c1, c2, c3, c4;  // coefficients of H, H^2, H^3, H^4
};

ChowClass chern_character(const ChernData& cd);
mpq_class euler_characteristic(const ChernData& cd, long twist);

// The unique Chern data with chi(F(-j)) = 0 for j = 0..3 at rank r;
// closed forms c1 = c3 = 0, c2 = r/3, c4 = r^2/18 - r/2.
ChernData solve_ulrich_chern(long r);

struct ObstructionReport {
  long r = 0;
  ChernData cd;
  mpq_class c4_degree;       // c4 evaluated against H^4 = 3, i.e. r^2/6 - 3r/2
  bool c4_integral = false;  // forces 3 | r
  bool rank3_contradiction = false;  // c4 != 0 though a rank-3 bundle needs c4 = 0
  bool admissible = false;           // 3 | r and r >= 6
  std::string verdict;
};

ObstructionReport obstruction_report(long r);

}  // namespace cmf
