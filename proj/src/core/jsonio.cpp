#include "jsonio.hpp"

namespace cmf {

using nlohmann::json;

namespace {

json coeff_to_json(const Coeff& c) {
  if (c.characteristic()) return json((std::int64_t)c.residue());
  const mpq_class& q = c.rat();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json((std::int64_t)q.get_num().get_si());
  return json(q.get_str());
}

Coeff coeff_from_json(const json& j, unsigned long p) {
  if (j.is_number_integer()) return Coeff::of_long(j.get<long>(), p);
  if (j.is_string()) {
    if (p != 0) throw std::invalid_argument("coeff: string form needs characteristic 0");
    mpq_class q(j.get<std::string>());
    return Coeff::rational(q);
  }
  throw std::invalid_argument("coeff: expected integer or string");
}

json terms_to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"c", coeff_to_json(c)}, {"e", m}});
  return terms;
}

Polynomial terms_from_json(const json& terms, const RingPtr& ring) {
  Polynomial f(ring);
  for (const auto& t : terms) {
    Monomial m = t.at("e").get<Monomial>();
    if (m.size() != ring->arity()) throw std::invalid_argument("poly: exponent arity mismatch");
    f.add_term(m, coeff_from_json(t.at("c"), ring->characteristic));
  }
  return f;
}

}  // namespace

json ring_to_json(const RingPtr& ring) {
  return json{{"vars", ring->vars}, {"char", ring->characteristic}};
}

RingPtr ring_from_json(const json& j) {
  return make_ring(j.at("vars").get<std::vector<std::string>>(), j.at("char").get<unsigned long>());
}

json poly_to_json(const Polynomial& f) {
  return json{{"ring", ring_to_json(f.ring())}, {"terms", terms_to_json(f)}};
}

Polynomial poly_from_json(const json& j, RingPtr ring) {
  if (!ring) ring = ring_from_json(j.at("ring"));
  return terms_from_json(j.at("terms"), ring);
}

json matrix_to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(terms_to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"ring", ring_to_json(m.ring())},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"row_degs", m.target().degrees},
              {"col_degs", m.source().degrees},
              {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const json& j, RingPtr ring) {
  if (!ring) ring = ring_from_json(j.at("ring"));
  std::size_t rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  GradedFreeModule tgt(rows, j.at("row_degs").get<std::vector<int>>());
  GradedFreeModule src(cols, j.at("col_degs").get<std::vector<int>>());
  PolyMatrix m(ring, tgt, src);
  const json& entries = j.at("entries");
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m.set(i, c, terms_from_json(entries.at(i).at(c), ring));
  return m;
}

}  // namespace cmf
