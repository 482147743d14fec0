#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "digitopo/grid.hpp"

namespace digitopo {

// Axis-aligned box of lattice points, half-open: rows [row0, row0 + rows).
struct Box {
  int row0 = 0;
  int col0 = 0;
  int rows = 0;
  int cols = 0;

  bool contains(Point2 p) const noexcept {
    return p.row >= row0 && p.col >= col0 && p.row < row0 + rows && p.col < col0 + cols;
  }
  friend bool operator==(const Box&, const Box&) = default;
};

// One component S as a bitmap over its bounding box plus a one-cell
// background frame. All per-component analyses run on this local frame; the
// frame guarantees S never touches the local border.
class ComponentMask {
 public:
  // Throws std::invalid_argument for an empty or duplicated point set.
  explicit ComponentMask(std::span<const Point2> points);

  const Box& box() const noexcept { return box_; }
  std::size_t area() const noexcept { return points_.size(); }
  // Row-major sorted.
  const std::vector<Point2>& points() const noexcept { return points_; }

  bool contains(Point2 p) const noexcept {
    return local().at(p.row - origin_row(), p.col - origin_col());
  }

  // Padded local frame; local (0, 0) is global (box.row0 - 1, box.col0 - 1).
  RasterView local() const noexcept { return {cells_, box_.rows + 2, box_.cols + 2}; }
  int origin_row() const noexcept { return box_.row0 - 1; }
  int origin_col() const noexcept { return box_.col0 - 1; }
  Point2 to_global(int local_row, int local_col) const noexcept {
    return {local_row + origin_row(), local_col + origin_col()};
  }

  // S alone on a background grid the size of the padded frame.
  BinaryGrid local_grid() const { return BinaryGrid(box_.rows + 2, box_.cols + 2, cells_); }

 private:
  Box box_;
  std::vector<Point2> points_;
  std::vector<std::uint8_t> cells_;
};

}  // namespace digitopo
