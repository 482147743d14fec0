#include "digitopo/holes.hpp"

#include <string>

namespace digitopo {

int holes_by_formula(const CornerCensus& census) {
  const long long diff = static_cast<long long>(census.c4) - static_cast<long long>(census.c2);
  if (diff % 4 != 0) {
    throw FormulaInapplicable("c4 - c2 = " + std::to_string(diff) + " is not a multiple of 4");
  }
  return static_cast<int>(1 + diff / 4);
}

ComponentReport analyze_component(const BinaryGrid& g, const LabelMap& labels, Label component_id,
                                  AnalysisOptions options) {
  const ComponentMask mask = labels.mask(component_id);

  ComponentReport report;
  report.component_id = component_id;
  report.area = mask.area();
  report.box = mask.box();
  report.census = corner_census(mask);

  bool applicable = report.census.degenerate == 0;
  if (options.run_validation) {
    report.validity = validate_component(g, mask);
    applicable = applicable && report.validity->valid();
  }
  if (applicable) {
    try {
      report.holes_formula = holes_by_formula(report.census);
    } catch (const FormulaInapplicable&) {
      report.holes_formula.reset();
    }
  }
  if (options.run_oracle) {
    report.holes_oracle = count_holes_oracle(mask);
    if (report.holes_formula) report.agreement = *report.holes_formula == *report.holes_oracle;
  }
  return report;
}

ComponentReport analyze_component(const BinaryGrid& g, Label component_id,
                                  AnalysisOptions options) {
  return analyze_component(g, label_components(g, LabelTarget::foreground), component_id, options);
}

std::vector<ComponentReport> analyze_image(const BinaryGrid& g, AnalysisOptions options) {
  const auto labels = label_components(g, LabelTarget::foreground);
  std::vector<ComponentReport> reports;
  reports.reserve(labels.component_count());
  for (Label id = 1; id <= labels.component_count(); ++id) {
    reports.push_back(analyze_component(g, labels, id, options));
  }
  return reports;
}

}  // namespace digitopo
