#pragma once

// Boundary curves of a component and the corner balance along each curve.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "digitopo/component.hpp"
#include "digitopo/grid.hpp"

namespace digitopo {

enum class ContourKind { outer, hole };

std::string_view to_string(ContourKind kind) noexcept;

struct Contour {
  ContourKind kind = ContourKind::outer;
  // Cyclic; starts at the row-major smallest point. Outer contours run
  // clockwise on screen (row down, col right), hole contours counterclockwise.
  std::vector<Point2> points;
  // For outer contours the points strictly inside the curve; for hole
  // contours the cells of the hole itself.
  std::vector<Point2> enclosed_region;
};

// Raw result of following the cracks between S and one complement region,
// keeping S on the right. On invalid components a point may repeat.
struct BoundaryWalk {
  std::vector<Point2> points;
  std::size_t region = 0;  // complement label in the padded frame; 1 is unbounded
};

std::vector<BoundaryWalk> walk_boundaries(const ComponentMask& component);

class TraceError : public std::runtime_error {
 public:
  enum class Kind { thin_point, pathological_window, contour_overlap };

  TraceError(Kind kind, Point2 at, const std::string& what)
      : std::runtime_error(what), kind_(kind), at_(at) {}

  Kind kind() const noexcept { return kind_; }
  Point2 at() const noexcept { return at_; }

 private:
  Kind kind_;
  Point2 at_;
};

// One outer contour, then one hole contour per enclosed complement region in
// row-major order of the regions. Throws TraceError when the boundary is not a
// family of disjoint simple curves.
std::vector<Contour> trace_contours(const ComponentMask& component);

struct CurveCensus {
  std::size_t cp2 = 0;
  std::size_t cp3 = 0;
  std::size_t cp4 = 0;
  std::size_t other = 0;

  friend bool operator==(const CurveCensus&, const CurveCensus&) = default;
};

// Classes are relative to S: direct neighbours inside the component.
// Throws std::invalid_argument if the contour has points outside S.
CurveCensus curve_census(const ComponentMask& component, const Contour& contour);

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CurveBalance {
  std::size_t cp2 = 0;
  std::size_t cp4 = 0;
  bool holds = false;  // cp2 == cp4 + 4
};

// Standalone simple closed curve given as a cyclic point sequence with
// consecutive points 8-adjacent. The interior is filled in when not given.
// Points are classified by direct neighbours in curve + interior.
// Throws CurveError for an open, self-intersecting or pathological curve.
CurveBalance check_curve_balance(std::span<const Point2> curve,
                                 std::optional<std::span<const Point2>> interior = std::nullopt);

struct ContourBalance {
  ContourKind kind;
  CurveCensus census;
  // outer: cp2 - cp4 == 4; hole: cp4 - cp2 == 4
  bool holds = false;
};

// Per-curve accounting of a valid component: summing inward minus outward
// corners over all its curves gives -4 for the outer curve and +4 per hole.
struct HoleAccounting {
  std::vector<ContourBalance> contours;
  long long lhs = 0;  // total cp4 - total cp2
  long long rhs = 0;  // -4 + 4 * holes
  int holes = 0;
  bool totals_match = false;  // per-curve sums equal the component census
  bool holds = false;
};

// Throws TraceError for invalid components.
HoleAccounting hole_accounting(const ComponentMask& component);
HoleAccounting hole_accounting(const ComponentMask& component,
                               std::span<const Contour> contours);

}  // namespace digitopo
