#pragma once

#include <json.hpp>

#include "vss/derham.hpp"
#include "vss/graded_hom.hpp"
#include "vss/points.hpp"
#include "vss/semigroup.hpp"

namespace vss {

using nlohmann::json;

// {"rank": q, "terms": [{"indices": [...], "coeff": "p/q"}, ...]}
json to_json(const GrassmannElement& a);
GrassmannElement element_from_json(const json& j);

// {"source_rank": q, "target_rank": p, "images": [element, ...]}
json to_json(const GradedHom& phi);
GradedHom hom_from_json(const json& j);

// {"q": q, "evens": [element, ...], "odds": [element, ...]}
json to_json(const QPoint& point);
QPoint point_from_json(const json& j);

// {"support": s, "range": j, "images": [element, ...]}
json to_json(const FiniteRangeEndo& g);

// {"domain": {"m": m, "n": n}, "representative": point}
json to_json(const PtInftyClass& c);

// {"dims": [m, n], "terms": [{"x": [...], "th": [...], "coeff": ...}]}
json to_json(const SuperFunction& f);

// {"dims": [m, n], "terms": [{"x": [...], "xi": [...], "dx": [...],
//  "dxi": [...], "coeff": "p/q"}, ...]}
json to_json(const SuperForm& form);
SuperForm form_from_json(const json& j);

json to_json(const HomReport& report);

}  // namespace vss
