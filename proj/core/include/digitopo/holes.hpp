#pragma once

// Hole counting by corner census: h = 1 + (c4 - c2) / 4.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "digitopo/component.hpp"
#include "digitopo/corners.hpp"
#include "digitopo/grid.hpp"
#include "digitopo/labeling.hpp"

namespace digitopo {

class FormulaInapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Throws FormulaInapplicable when c4 - c2 is not a multiple of 4, which only
// happens for components outside the formula's hypothesis.
int holes_by_formula(const CornerCensus& census);

struct AnalysisOptions {
  bool run_oracle = true;
  bool run_validation = true;
};

struct ComponentReport {
  Label component_id = 0;
  std::size_t area = 0;
  Box box;
  CornerCensus census;
  std::optional<int> holes_formula;  // empty when the formula is inapplicable
  std::optional<int> holes_oracle;
  std::optional<ValidityReport> validity;
  std::optional<bool> agreement;  // set when both hole counts exist
};

// With both options off this is a single census pass over the component's
// padded bounding box.
ComponentReport analyze_component(const BinaryGrid& g, const LabelMap& labels, Label component_id,
                                  AnalysisOptions options = {});
// Throws std::out_of_range for an unknown id.
ComponentReport analyze_component(const BinaryGrid& g, Label component_id,
                                  AnalysisOptions options = {});

// One report per 4-connected foreground component, in id order.
std::vector<ComponentReport> analyze_image(const BinaryGrid& g, AnalysisOptions options = {});

}  // namespace digitopo
