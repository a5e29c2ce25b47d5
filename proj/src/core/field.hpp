#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmf {

// Exact coefficient: a reduced rational (characteristic 0) or a residue
// modulo a prime p.  The characteristic travels with the value; mixing
// characteristics is an error.
class Coeff {
public:
  Coeff() : p_(0), q_(0) {}

  static Coeff rational(mpq_class v) {
    Coeff c;
    c.p_ = 0;
    v.canonicalize();
    c.q_ = std::move(v);
    return c;
  }
  static Coeff integer(long n) { return rational(mpq_class(n)); }
  static Coeff mod(unsigned long v, unsigned long p) {
    if (p == 0) throw std::invalid_argument("Coeff::mod: p must be positive");
    Coeff c;
    c.p_ = p;
    c.r_ = v % p;
    return c;
  }
  static Coeff of_long(long n, unsigned long p) {
    if (p == 0) return integer(n);
    long m = n % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return mod(static_cast<unsigned long>(m), p);
  }
  static Coeff zero(unsigned long p) { return of_long(0, p); }
  static Coeff one(unsigned long p) { return of_long(1, p); }

  unsigned long characteristic() const { return p_; }
  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  const mpq_class& rat() const {
    require_char(0);
    return q_;
  }
  unsigned long residue() const {
    if (p_ == 0) throw std::logic_error("Coeff: rational has no residue");
    return r_;
  }

  Coeff operator+(const Coeff& o) const {
    match(o);
    if (p_ == 0) return rational(q_ + o.q_);
    return mod(addmod(r_, o.r_, p_), p_);
  }
  Coeff operator-(const Coeff& o) const {
    match(o);
    if (p_ == 0) return rational(q_ - o.q_);
    return mod(addmod(r_, p_ - o.r_, p_), p_);
  }
  Coeff operator*(const Coeff& o) const {
    match(o);
    if (p_ == 0) return rational(q_ * o.q_);
    return mod(mulmod(r_, o.r_, p_), p_);
  }
  Coeff operator-() const {
    if (p_ == 0) return rational(-q_);
    return mod(r_ == 0 ? 0 : p_ - r_, p_);
  }
  Coeff inverse() const {
    if (is_zero()) throw std::domain_error("Coeff: division by zero");
    if (p_ == 0) return rational(1 / q_);
    return mod(invmod(r_, p_), p_);
  }
  Coeff operator/(const Coeff& o) const { return *this * o.inverse(); }

  bool operator==(const Coeff& o) const {
    match(o);
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
  }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  std::string str() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_);
  }

  static unsigned long addmod(unsigned long a, unsigned long b, unsigned long p) {
    unsigned long s = a + b;
    return s >= p ? s - p : s;
  }
  static unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>(
        (static_cast<unsigned __int128>(a) * b) % p);
  }
  static unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mulmod(r, a, p);
      a = mulmod(a, a, p);
      e >>= 1;
    }
    return r;
  }
  static unsigned long invmod(unsigned long a, unsigned long p) {
    // p prime
    return powmod(a, p - 2, p);
  }

private:
  void require_char(unsigned long p) const {
    if (p_ != p) throw std::invalid_argument("Coeff: characteristic mismatch");
  }
  void match(const Coeff& o) const { require_char(o.p_); }

  unsigned long p_;  // 0 = rational
  mpq_class q_;
  unsigned long r_ = 0;
};

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace cmf
