#include "poly.hpp"

#include <sstream>

namespace cmf {

Polynomial Polynomial::constant(const RingPtr& ring, const Coeff& c) {
  Polynomial f(ring);
  f.add_term(Monomial(ring->arity(), 0), c);
  return f;
}

Polynomial Polynomial::variable(const RingPtr& ring, int var) {
  if (var < 0 || static_cast<std::size_t>(var) >= ring->arity())
    throw std::out_of_range("Polynomial::variable: index out of range");
  Monomial m(ring->arity(), 0);
  m[var] = 1;
  return term(ring, std::move(m), Coeff::one(ring->characteristic));
}

Polynomial Polynomial::term(const RingPtr& ring, Monomial m, const Coeff& c) {
  if (m.size() != ring->arity())
    throw std::invalid_argument("Polynomial::term: monomial arity mismatch");
  Polynomial f(ring);
  f.add_term(std::move(m), c);
  return f;
}

void Polynomial::add_term(const Monomial& m, const Coeff& c) {
  if (c.characteristic() != ring_->characteristic)
    throw std::invalid_argument("Polynomial: coefficient field mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    Coeff s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

Coeff Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff::zero(ring_->characteristic) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial r(ring_);
  Monomial prod(ring_->arity());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return terms_ == o.terms_;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || static_cast<std::size_t>(var) >= ring_->arity())
    throw std::out_of_range("derivative: variable index out of range");
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * Coeff::of_long(m[var], ring_->characteristic));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->arity())
    throw std::invalid_argument("substitute: every variable needs an image");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  for (const auto& g : images) require_same_ring(g.ring(), target);
  if (target->characteristic != ring_->characteristic)
    throw std::invalid_argument("substitute: characteristic mismatch");

  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t = t * images[i];
    r = r + t;
  }
  return r;
}

Coeff Polynomial::evaluate(const std::vector<Coeff>& point) const {
  if (point.size() != ring_->arity())
    throw std::invalid_argument("evaluate: point arity mismatch");
  for (const auto& c : point)
    if (c.characteristic() != ring_->characteristic)
      throw std::invalid_argument("evaluate: coefficient field mismatch");
  Coeff acc = Coeff::zero(ring_->characteristic);
  for (const auto& [m, c] : terms_) {
    Coeff t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t = t * point[i];
    acc = acc + t;
  }
  return acc;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous(int* deg) const {
  if (terms_.empty()) {
    if (deg) *deg = -1;
    return true;
  }
  int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  if (deg) *deg = d;
  return true;
}

Multidegree Polynomial::monomial_multidegree(const Monomial& m) const {
  if (!ring_->multigrading)
    throw std::logic_error("multidegree: ring has no multigrading");
  const auto& g = *ring_->multigrading;
  std::size_t len = g.empty() ? 0 : g[0].size();
  Multidegree d(len, 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < len; ++k) d[k] += static_cast<long>(m[i]) * g[i][k];
  return d;
}

std::optional<Multidegree> Polynomial::multidegree() const {
  if (!ring_->multigrading)
    throw std::logic_error("multidegree: ring has no multigrading");
  if (terms_.empty()) return std::nullopt;
  Multidegree d = monomial_multidegree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_multidegree(m) != d) return std::nullopt;
  return d;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    if (!first) {
      if (!cs.empty() && cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    } else if (!cs.empty() && cs[0] == '-') {
      os << "-";
      cs = cs.substr(1);
    }
    first = false;
    bool any_var = total_degree(m) > 0;
    if (!any_var || cs != "1") os << cs;
    bool star = !any_var || cs != "1";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!star)
        star = true;
      else
        os << "*";
      os << ring_->vars[i];
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

static void enumerate_monomials(std::size_t n, std::size_t pos, int rem, Monomial& cur,
                                std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur[pos] = rem;
    out.push_back(cur);
    return;
  }
  for (int e = rem; e >= 0; --e) {
    cur[pos] = e;
    enumerate_monomials(n, pos + 1, rem - e, cur, out);
  }
}

std::vector<Monomial> monomial_basis(const RingPtr& ring, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial_basis: negative degree");
  std::size_t n = ring->arity();
  std::vector<Monomial> out;
  if (n == 0) {
    if (degree == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial cur(n, 0);
  enumerate_monomials(n, 0, degree, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

}  // namespace cmf
