#pragma once

#include <json.hpp>

#include "polymat.hpp"

namespace cmf {

nlohmann::json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const nlohmann::json& j);

// {"ring": {"vars": [...], "char": 0|p}, "terms": [{"c": int|"num/den", "e": [...]}]}
nlohmann::json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const nlohmann::json& j, RingPtr ring = nullptr);

// {"ring": ..., "rows": r, "cols": c, "row_degs": [...], "col_degs": [...],
//  "entries": [[terms, ...], ...]}  with entries sharing the top-level ring
nlohmann::json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const nlohmann::json& j, RingPtr ring = nullptr);

}  // namespace cmf
