#include "sections.hpp"

namespace cmf {

LinearSection random_section(int n, std::uint64_t seed, unsigned long characteristic) {
  if (n < 3 || n > 8) throw std::invalid_argument("random_section: need 3 <= n <= 8");
  LinearSection sec;
  sec.n = n;
  sec.seed = seed;
  std::vector<std::string> vars;
  for (int i = 0; i <= n; ++i) vars.push_back("z" + std::to_string(i));
  sec.ring = make_ring(std::move(vars), characteristic);

  Rng rng(seed);
  for (int v = 0; v < 27; ++v) {
    Polynomial form(sec.ring);
    for (int i = 0; i <= n; ++i) {
      Coeff c = characteristic ? Coeff::mod(rng.below(characteristic), characteristic)
                               : Coeff::integer(rng.range(-9, 9));
      if (!c.is_zero()) form = form + c * Polynomial::variable(sec.ring, i);
    }
    sec.images.push_back(std::move(form));
  }
  return sec;
}

SectionOutput restrict_mf(const MatrixFactorization& mf, const LinearSection& sec) {
  if (sec.images.size() != mf.f.ring()->arity())
    throw std::invalid_argument("restrict_mf: substitution arity mismatch");
  Polynomial f = mf.f.substitute(sec.images);
  if (f.is_zero()) throw DegenerateSection("restrict_mf: section cubic vanishes");
  PolyMatrix a = mf.a.substituted(sec.images);
  PolyMatrix b = mf.b.substituted(sec.images);
  // the Z^7 bookkeeping does not descend to the z-ring
  a.target_mut().multidegrees.reset();
  a.source_mut().multidegrees.reset();
  b.target_mut().multidegrees.reset();
  b.source_mut().multidegrees.reset();
  MatrixFactorization out{std::move(a), std::move(b), f};
  out.verify();
  return SectionOutput{sec, std::move(f), std::move(out)};
}

SectionOutput section_with_retries(const MatrixFactorization& mf, int n, std::uint64_t seed,
                                   unsigned long characteristic, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    LinearSection sec = random_section(n, seed + (std::uint64_t)t * 0x9e3779b97f4a7c15ULL,
                                       characteristic);
    try {
      return restrict_mf(mf, sec);
    } catch (const DegenerateSection&) {
      continue;
    }
  }
  throw DegenerateSection("section_with_retries: all attempts degenerate");
}

SmoothnessReport smoothness_probe(const Polynomial& f, int trials, std::uint64_t seed) {
  unsigned long p = f.characteristic();
  if (p == 0) throw std::invalid_argument("smoothness_probe: needs a prime field");
  const RingPtr& ring = f.ring();
  std::size_t nv = ring->arity();
  Rng rng(seed);
  SmoothnessReport rep;
  rep.trials = trials;

  std::vector<Polynomial> grad;
  for (std::size_t v = 0; v < nv; ++v) grad.push_back(f.derivative((int)v));

  for (int t = 0; t < trials; ++t) {
    std::size_t slice = (std::size_t)rng.below(nv);
    std::vector<Coeff> pt;
    for (std::size_t v = 0; v < nv; ++v) pt.push_back(Coeff::mod(rng.below(p), p));

    // collapse f to a univariate cubic in the sliced coordinate
    Coeff uni[4] = {Coeff::zero(p), Coeff::zero(p), Coeff::zero(p), Coeff::zero(p)};
    for (const auto& [m, c] : f.terms()) {
      Coeff v = c;
      for (std::size_t k = 0; k < nv; ++k)
        if (k != slice)
          for (int e = 0; e < m[k]; ++e) v = v * pt[k];
      uni[m[slice]] = uni[m[slice]] + v;
    }
    bool found = false;
    for (unsigned long r = 0; r < p && !found; ++r) {
      Coeff z = Coeff::mod(r, p);
      Coeff val = ((uni[3] * z + uni[2]) * z + uni[1]) * z + uni[0];
      if (val.is_zero()) {
        pt[slice] = z;
        found = true;
      }
    }
    if (!found) {
      rep.no_point += 1;
      continue;
    }
    bool nonzero = false;
    for (const auto& g : grad)
      if (!g.evaluate(pt).is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero)
      rep.nonsingular += 1;
    else
      rep.singular += 1;
  }
  return rep;
}

}  // namespace cmf
