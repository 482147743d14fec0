#include "report_json.hpp"

namespace digitopo::cli {

using nlohmann::json;

namespace {

template <class T>
json or_null(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json component_json(const ComponentReport& r) {
  return json{
      {"component_id", r.component_id},
      {"area", r.area},
      {"c2", r.census.c2},
      {"c3", r.census.c3},
      {"c4", r.census.c4},
      {"holes_formula", or_null(r.holes_formula)},
      {"holes_oracle", or_null(r.holes_oracle)},
      {"valid", r.validity ? json(r.validity->valid()) : json(nullptr)},
      {"agreement", or_null(r.agreement)},
  };
}

json point_json(Point2 p) { return json::array({p.row, p.col}); }

json reasons_json(const ValidityReport& validity) {
  json out = json::array();
  for (const auto& issue : validity.reasons) {
    out.push_back({{"kind", std::string(to_string(issue.kind))}, {"at", point_json(issue.at)}});
  }
  return out;
}

json contour_json(const Contour& contour, const ContourBalance& balance) {
  json points = json::array();
  for (const auto& p : contour.points) points.push_back(point_json(p));
  return json{
      {"kind", std::string(to_string(contour.kind))},
      {"length", contour.points.size()},
      {"cp2", balance.census.cp2},
      {"cp3", balance.census.cp3},
      {"cp4", balance.census.cp4},
      {"balance_holds", balance.holds},
      {"points", std::move(points)},
  };
}

}  // namespace digitopo::cli
