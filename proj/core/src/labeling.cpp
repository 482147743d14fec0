#include "digitopo/labeling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace digitopo {

LabelMap::LabelMap(int height, int width, std::vector<Label> labels,
                   std::vector<std::vector<Point2>> components)
    : height_(height),
      width_(width),
      labels_(std::move(labels)),
      components_(std::move(components)) {}

Label LabelMap::at(Point2 p) const noexcept {
  if (p.row < 0 || p.col < 0 || p.row >= height_ || p.col >= width_) return 0;
  return labels_[static_cast<std::size_t>(p.row) * width_ + static_cast<std::size_t>(p.col)];
}

const std::vector<Point2>& LabelMap::points(Label id) const {
  if (id == 0 || id > components_.size()) {
    throw std::out_of_range("unknown component id " + std::to_string(id));
  }
  return components_[id - 1];
}

LabelMap label_components(RasterView raster, LabelTarget target, Adjacency connectivity,
                          std::uint64_t* touches) {
  const int h = raster.height;
  const int w = raster.width;
  const bool want = target == LabelTarget::foreground;
  std::uint64_t reads = 0;
  auto is_target = [&](int r, int c) {
    ++reads;
    return raster.at(r, c) == want;
  };

  std::vector<Label> labels(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), 0);
  std::vector<std::vector<Point2>> components;
  std::vector<Point2> queue;

  static constexpr int kDirect[4][2] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
  static constexpr int kIndirect[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                          {0, 1},   {1, -1}, {1, 0},  {1, 1}};
  const auto* steps = connectivity == Adjacency::direct ? kDirect : kIndirect;
  const int step_count = connectivity == Adjacency::direct ? 4 : 8;

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * w + c;
      if (labels[idx] != 0 || !is_target(r, c)) continue;
      const Label id = static_cast<Label>(components.size() + 1);
      std::vector<Point2> members;
      labels[idx] = id;
      queue.clear();
      queue.push_back({r, c});
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Point2 p = queue[head];
        members.push_back(p);
        for (int s = 0; s < step_count; ++s) {
          const int nr = p.row + steps[s][0];
          const int nc = p.col + steps[s][1];
          if (nr < 0 || nc < 0 || nr >= h || nc >= w) continue;
          const std::size_t nidx = static_cast<std::size_t>(nr) * w + nc;
          if (labels[nidx] != 0 || !is_target(nr, nc)) continue;
          labels[nidx] = id;
          queue.push_back({nr, nc});
        }
      }
      std::sort(members.begin(), members.end());
      components.push_back(std::move(members));
    }
  }
  if (touches) *touches += reads;
  return LabelMap(h, w, std::move(labels), std::move(components));
}

LabelMap label_components(const BinaryGrid& g, LabelTarget target, Adjacency connectivity) {
  return label_components(g.raster(), target, connectivity);
}

std::size_t count_complement_regions(RasterView raster, std::uint64_t* touches) {
  const int h = raster.height + 2;
  const int w = raster.width + 2;
  std::vector<std::uint8_t> padded(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), 0);
  for (int r = 0; r < raster.height; ++r) {
    for (int c = 0; c < raster.width; ++c) {
      padded[static_cast<std::size_t>(r + 1) * w + (c + 1)] = raster.at(r, c) ? 1 : 0;
    }
  }
  if (touches) *touches += static_cast<std::uint64_t>(raster.height) * raster.width;
  RasterView view{padded, h, w};
  return label_components(view, LabelTarget::background, Adjacency::direct, touches)
      .component_count();
}

int count_holes_oracle(const ComponentMask& component) {
  // The mask frame already isolates S and leaves a background ring around it.
  auto complement = label_components(component.local(), LabelTarget::background);
  return static_cast<int>(complement.component_count()) - 1;
}

int count_holes_oracle(const BinaryGrid& g, const LabelMap& labels, Label component_id) {
  const auto& pts = labels.points(component_id);
  for (const auto& p : pts) {
    if (p.row == 0 || p.col == 0 || p.row == g.height() - 1 || p.col == g.width() - 1) {
      throw std::invalid_argument("component " + std::to_string(component_id) +
                                  " touches the image border; pad the grid first");
    }
  }
  return count_holes_oracle(ComponentMask(pts));
}

int count_holes_oracle(const BinaryGrid& g, Label component_id) {
  return count_holes_oracle(g, label_components(g, LabelTarget::foreground), component_id);
}

}  // namespace digitopo
