#pragma once

// Boundary points of a component S and their corner classes.
//
// A point of S is a boundary point when one of its eight neighbours lies
// outside S. Its class is the number of its four direct neighbours inside S:
// class 2 points are outward corners, class 3 points lie on straight runs,
// class 4 points are inward corners (all direct neighbours present, one
// diagonal missing). Classes 0 and 1 only occur on isolated points and the
// tips of one-pixel-wide spurs; such components are outside the formula's
// hypothesis and are reported, not rejected, by the census.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "digitopo/component.hpp"
#include "digitopo/grid.hpp"

namespace digitopo {

struct CornerCensus {
  std::size_t c2 = 0;
  std::size_t c3 = 0;
  std::size_t c4 = 0;
  std::size_t boundary_total = 0;  // includes degenerate points
  std::size_t degenerate = 0;      // boundary points of class 0 or 1

  friend bool operator==(const CornerCensus&, const CornerCensus&) = default;
};

struct ClassifiedPoint {
  Point2 point;
  int direct_neighbors = 0;

  friend bool operator==(const ClassifiedPoint&, const ClassifiedPoint&) = default;
};

struct CornerClassification {
  CornerCensus census;
  std::vector<ClassifiedPoint> boundary;  // row-major

  // Class of a boundary point, or -1 for non-boundary points.
  int class_of(Point2 p) const;
};

// Census over all member cells of the raster in one streaming pass: each
// cell is read from the source exactly once, into a three-row window.
// `touches` accumulates the number of source reads.
CornerCensus corner_census(RasterView raster, std::uint64_t* touches = nullptr);
CornerCensus corner_census(const ComponentMask& component, std::uint64_t* touches = nullptr);

CornerClassification classify_corners(const ComponentMask& component);
// Throws std::invalid_argument if a listed point is not foreground in g.
CornerClassification classify_corners(const BinaryGrid& g, std::span<const Point2> component);

std::vector<Point2> boundary_points(const ComponentMask& component);
// Throws std::invalid_argument for an empty component.
std::vector<Point2> boundary_points(const BinaryGrid& g, std::span<const Point2> component);

int direct_neighbor_count(const ComponentMask& component, Point2 p);

// Grid rendering in the style of an annotated image: '0' background,
// '2'/'4' outward/inward corners of the component, '*' degenerate points,
// '1' for every other foreground cell.
std::vector<std::string> annotate_corners(const BinaryGrid& g,
                                          const CornerClassification& classes);

struct PathologyReport {
  std::vector<Point2> windows;  // top-left corner of each offending 2x2 window
  std::uint64_t windows_scanned = 0;

  bool clean() const noexcept { return windows.empty(); }
};

// Flags every 2x2 window that meets S in exactly one diagonal pair. Scans the
// windows of the component's padded frame once each, in row-major order;
// `on_window` (optional) observes each window's top-left corner.
PathologyReport find_pathological(const ComponentMask& component,
                                  const std::function<void(Point2)>& on_window = {});
PathologyReport find_pathological(const BinaryGrid& g, std::span<const Point2> component);

enum class ValidityReason {
  isolated_or_thin_point,
  pathological_window,
  contour_overlap,
  border_contact,
};

std::string_view to_string(ValidityReason reason) noexcept;

struct ValidityIssue {
  ValidityReason kind;
  Point2 at;

  friend bool operator==(const ValidityIssue&, const ValidityIssue&) = default;
};

struct ValidityReport {
  std::vector<ValidityIssue> reasons;

  bool valid() const noexcept { return reasons.empty(); }
  bool has(ValidityReason kind) const noexcept;
};

struct ValidationOptions {
  // Out-of-grid cells count as background, so touching the border is fine by
  // default. Set this to also report border_contact.
  bool reject_border_contact = false;
};

// Valid iff every boundary point has class >= 2, no pathological window
// exists, and the boundary walks visit every boundary point exactly once.
ValidityReport validate_component(const BinaryGrid& g, const ComponentMask& component,
                                  ValidationOptions options = {});

}  // namespace digitopo
