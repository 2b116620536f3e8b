#pragma once

#include <json.hpp>

#include "tiltkit/grid_measure.hpp"
#include "tiltkit/poly.hpp"

namespace tiltkit {

using json = nlohmann::json;

/// {"coeffs": ["1/2", "0", "-3/4"]}
json poly_to_json(const Poly& p);
/// Accepts the object form above or a text polynomial given as a JSON string.
Poly poly_from_json(const json& j);

/// {"denom": "2", "offset": "-1", "masses": ["1/3", "0", "2/3"]}
json measure_to_json(const GridMeasure& m);
/// Accepts the grid form above or {"points": [...], "masses": [...]}.
GridMeasure measure_from_json(const json& j);

}  // namespace tiltkit
