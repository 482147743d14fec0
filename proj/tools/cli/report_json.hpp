#pragma once

#include <json.hpp>

#include "digitopo/curves.hpp"
#include "digitopo/holes.hpp"
#include "digitopo/solid3d.hpp"

namespace digitopo::cli {

// Exactly: component_id, area, c2, c3, c4, holes_formula, holes_oracle,
// valid, agreement. Missing values are null.
nlohmann::json component_json(const ComponentReport& report);

nlohmann::json point_json(Point2 p);
nlohmann::json reasons_json(const ValidityReport& validity);
nlohmann::json contour_json(const Contour& contour, const ContourBalance& balance);

}  // namespace digitopo::cli
