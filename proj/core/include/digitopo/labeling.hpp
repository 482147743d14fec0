#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "digitopo/component.hpp"
#include "digitopo/grid.hpp"

namespace digitopo {

using Label = std::uint32_t;

enum class LabelTarget { foreground, background };

// Connected components of one cell class. Label 0 marks cells outside the
// target class; components are numbered 1..component_count() in order of
// their first cell in a row-major scan.
class LabelMap {
 public:
  LabelMap(int height, int width, std::vector<Label> labels,
           std::vector<std::vector<Point2>> components);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  std::size_t component_count() const noexcept { return components_.size(); }

  // 0 for out-of-bounds points and non-target cells.
  Label at(Point2 p) const noexcept;
  const std::vector<Label>& labels() const noexcept { return labels_; }

  // Throws std::out_of_range for an unknown id.
  const std::vector<Point2>& points(Label id) const;
  ComponentMask mask(Label id) const { return ComponentMask(points(id)); }

 private:
  int height_;
  int width_;
  std::vector<Label> labels_;
  std::vector<std::vector<Point2>> components_;
};

// Breadth-first labeling. `touches`, when given, accumulates the number of
// raster reads performed.
LabelMap label_components(RasterView raster, LabelTarget target,
                          Adjacency connectivity = Adjacency::direct,
                          std::uint64_t* touches = nullptr);
LabelMap label_components(const BinaryGrid& g, LabelTarget target,
                          Adjacency connectivity = Adjacency::direct);

// Number of 4-connected complement regions of the member cells, counted in a
// copy of the raster padded by one background cell on every side (so the
// unbounded region is always one region).
std::size_t count_complement_regions(RasterView raster, std::uint64_t* touches = nullptr);

// Brute-force hole count: complement components of S alone, minus the
// unbounded one. Other foreground components never influence the result.
int count_holes_oracle(const ComponentMask& component);

// Throws std::out_of_range for an unknown id and std::invalid_argument when
// the component touches the grid border (pad the grid first).
int count_holes_oracle(const BinaryGrid& g, const LabelMap& labels, Label component_id);
int count_holes_oracle(const BinaryGrid& g, Label component_id);

}  // namespace digitopo
