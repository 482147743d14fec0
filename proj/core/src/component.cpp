#include "digitopo/component.hpp"

#include <algorithm>
#include <stdexcept>

namespace digitopo {

ComponentMask::ComponentMask(std::span<const Point2> points)
    : points_(points.begin(), points.end()) {
  if (points_.empty()) throw std::invalid_argument("empty component");
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw std::invalid_argument("component has duplicated points");
  }
  int rmin = points_.front().row, rmax = points_.back().row;
  int cmin = points_.front().col, cmax = cmin;
  for (const auto& p : points_) {
    cmin = std::min(cmin, p.col);
    cmax = std::max(cmax, p.col);
  }
  box_ = {rmin, cmin, rmax - rmin + 1, cmax - cmin + 1};
  const int w = box_.cols + 2;
  cells_.assign(static_cast<std::size_t>(box_.rows + 2) * static_cast<std::size_t>(w), 0);
  for (const auto& p : points_) {
    cells_[static_cast<std::size_t>(p.row - origin_row()) * w +
           static_cast<std::size_t>(p.col - origin_col())] = 1;
  }
}

}  // namespace digitopo
