#include "chow.hpp"

#include <stdexcept>

namespace cmf {

ChowClass ChowClass::operator+(const ChowClass& o) const {
  ChowClass out;
  for (int i = 0; i < 5; ++i) out.c[i] = c[i] + o.c[i];
  return out;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
  ChowClass out;
  for (int i = 0; i < 5; ++i) out.c[i] = c[i] - o.c[i];
  return out;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
  ChowClass out;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; i + j < 5; ++j) out.c[i + j] += c[i] * o.c[j];
  return out;
}

ChowClass ChowClass::scalar(const mpq_class& v) {
  ChowClass out;
  out.c[0] = v;
  return out;
}

ChowClass ChowClass::exp_line(const mpq_class& j) {
  ChowClass out;
  mpq_class pow = 1, fact = 1;
  for (int i = 0; i < 5; ++i) {
    out.c[i] = pow / fact;
    pow *= j;
    fact *= i + 1;
  }
  return out;
}

ChowClass rr_class() {
  ChowClass t;
  t.c = {mpq_class(1), mpq_class(3, 2), mpq_class(5, 4), mpq_class(3, 4), mpq_class(1, 3)};
  return t;
}

ChowClass chern_character(const ChernData& cd) {
  const mpq_class &c1 = cd.c1, &c2 = cd.c2, &c3 = cd.c3, &c4 = cd.c4;
  ChowClass ch;
  ch.c[0] = cd.r;
  ch.c[1] = c1;
  ch.c[2] = (c1 * c1 - 2 * c2) / 2;
  ch.c[3] = (c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3) / 6;
  ch.c[4] = (c1 * c1 * c1 * c1 - 4 * c1 * c1 * c2 + 4 * c1 * c3 + 2 * c2 * c2 - 4 * c4) / 24;
  return ch;
}

mpq_class euler_characteristic(const ChernData& cd, long twist) {
  ChowClass v = chern_character(cd) * ChowClass::exp_line(twist) * rr_class();
  return v.degree();
}

ChernData solve_ulrich_chern(long r) {
  if (r < 1) throw std::invalid_argument("solve_ulrich_chern: rank must be positive");
  // chi(F(-j)) is linear in ch1..ch4 once ch0 = r is fixed; assemble the
  // 4x4 system from the four twists and eliminate.
  mpq_class a[4][5];  // rows j = 0..3: coefficients of ch1..ch4 | rhs
  for (long j = 0; j < 4; ++j) {
    ChowClass weight = ChowClass::exp_line(-j) * rr_class();
    mpq_class rhs = -3 * r * weight.c[4];  // the ch0 contribution
    for (int k = 1; k <= 4; ++k) a[j][k - 1] = 3 * weight.c[4 - k];
    a[j][4] = rhs;
  }
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int row = col; row < 4; ++row)
      if (a[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::logic_error("solve_ulrich_chern: singular system");
    for (int k = 0; k < 5; ++k) std::swap(a[col][k], a[piv][k]);
    for (int row = 0; row < 4; ++row) {
      if (row == col || a[row][col] == 0) continue;
      mpq_class m = a[row][col] / a[col][col];
      for (int k = col; k < 5; ++k) a[row][k] -= m * a[col][k];
    }
  }
  mpq_class ch[5];
  ch[0] = r;
  for (int k = 1; k <= 4; ++k) ch[k] = a[k - 1][4] / a[k - 1][k - 1];

  ChernData cd;
  cd.r = r;
  cd.c1 = ch[1];
  cd.c2 = (cd.c1 * cd.c1 - 2 * ch[2]) / 2;
  cd.c3 = (6 * ch[3] - cd.c1 * cd.c1 * cd.c1 + 3 * cd.c1 * cd.c2) / 3;
  cd.c4 = (cd.c1 * cd.c1 * cd.c1 * cd.c1 - 4 * cd.c1 * cd.c1 * cd.c2 + 4 * cd.c1 * cd.c3 +
           2 * cd.c2 * cd.c2 - 24 * ch[4]) /
          4;
  return cd;
}

ObstructionReport obstruction_report(long r) {
  ObstructionReport rep;
  rep.r = r;
  rep.cd = solve_ulrich_chern(r);
  rep.c4_degree = 3 * rep.cd.c4;
  rep.c4_integral = rep.c4_degree.get_den() == 1;
  rep.rank3_contradiction = (r == 3) && rep.cd.c4 != 0;
  rep.admissible = rep.c4_integral && r % 3 == 0 && r >= 6 && !rep.rank3_contradiction;
  if (!rep.c4_integral)
    rep.verdict = "excluded: c4 of the twist is not an integer (rank must be divisible by 3)";
  else if (r == 3)
    rep.verdict = "excluded: rank 3 forces c4 = 0 but the solve gives c4 = -3";
  else if (r < 6)
    rep.verdict = "excluded: rank below 6";
  else
    rep.verdict = "admissible: rank divisible by 3 and at least 6";
  return rep;
}

}  // namespace cmf
