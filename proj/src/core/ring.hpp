#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmf {

using Multidegree = std::vector<long>;

// A polynomial ring: ordered variables, a coefficient field (char 0 or a
// prime p != 2, 3), and an optional multigrading (one integer vector per
// variable, all of the same length).
struct Ring {
  std::vector<std::string> vars;
  unsigned long characteristic = 0;
  std::optional<std::vector<Multidegree>> multigrading;

  std::size_t arity() const { return vars.size(); }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  void validate() const {
    if (characteristic == 2 || characteristic == 3)
      throw std::invalid_argument("Ring: characteristic 2 and 3 are excluded");
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j])
          throw std::invalid_argument("Ring: duplicate variable " + vars[i]);
    if (multigrading) {
      if (multigrading->size() != vars.size())
        throw std::invalid_argument("Ring: multigrading arity mismatch");
      if (!multigrading->empty()) {
        std::size_t len = (*multigrading)[0].size();
        for (const auto& v : *multigrading)
          if (v.size() != len)
            throw std::invalid_argument("Ring: multigrading length mismatch");
      }
    }
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, unsigned long characteristic = 0,
                         std::optional<std::vector<Multidegree>> grading = std::nullopt) {
  auto r = std::make_shared<Ring>();
  r->vars = std::move(vars);
  r->characteristic = characteristic;
  r->multigrading = std::move(grading);
  r->validate();
  return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->vars == b->vars && a->characteristic == b->characteristic &&
         a->multigrading == b->multigrading;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("ring mismatch");
}

}  // namespace cmf
