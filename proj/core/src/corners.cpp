#include "digitopo/corners.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>

#include "digitopo/curves.hpp"

namespace digitopo {

namespace {

// Streams the raster through a three-row ring buffer with a zero column on
// either side, so neighbourhood lookups never branch on bounds.
template <class Emit>
CornerCensus census_pass(RasterView src, std::uint64_t* touches, Emit&& emit) {
  const int h = src.height;
  const int w = src.width;
  const std::size_t stride = static_cast<std::size_t>(w) + 2;
  std::vector<std::uint8_t> ring(3 * stride, 0);
  std::uint64_t reads = 0;

  auto slot = [&](int r) { return ring.data() + static_cast<std::size_t>((r + 3) % 3) * stride; };
  auto load = [&](int r) {
    std::uint8_t* dst = slot(r);
    if (r < 0 || r >= h) {
      std::memset(dst, 0, stride);
      return;
    }
    const std::uint8_t* row = src.cells.data() + static_cast<std::size_t>(r) * w;
    for (int c = 0; c < w; ++c) dst[c + 1] = row[c] != 0;
    reads += static_cast<std::uint64_t>(w);
  };

  CornerCensus census;
  load(-1);
  load(0);
  for (int r = 0; r < h; ++r) {
    load(r + 1);
    const std::uint8_t* up = slot(r - 1);
    const std::uint8_t* mid = slot(r);
    const std::uint8_t* down = slot(r + 1);
    for (int c = 1; c <= w; ++c) {
      if (!mid[c]) continue;
      const int n = up[c] + down[c] + mid[c - 1] + mid[c + 1];
      const bool boundary = n < 4 || !up[c - 1] || !up[c + 1] || !down[c - 1] || !down[c + 1];
      if (!boundary) continue;
      ++census.boundary_total;
      switch (n) {
        case 2: ++census.c2; break;
        case 3: ++census.c3; break;
        case 4: ++census.c4; break;
        default: ++census.degenerate; break;
      }
      emit(r, c - 1, n);
    }
  }
  if (touches) *touches += reads;
  return census;
}

void require_foreground(const BinaryGrid& g, std::span<const Point2> component) {
  for (const auto& p : component) {
    if (!g.foreground(p)) throw std::invalid_argument("component point is not foreground");
  }
}

}  // namespace

int CornerClassification::class_of(Point2 p) const {
  auto it = std::lower_bound(boundary.begin(), boundary.end(), p,
                             [](const ClassifiedPoint& a, Point2 b) { return a.point < b; });
  if (it == boundary.end() || it->point != p) return -1;
  return it->direct_neighbors;
}

CornerCensus corner_census(RasterView raster, std::uint64_t* touches) {
  return census_pass(raster, touches, [](int, int, int) {});
}

CornerCensus corner_census(const ComponentMask& component, std::uint64_t* touches) {
  return corner_census(component.local(), touches);
}

CornerClassification classify_corners(const ComponentMask& component) {
  CornerClassification out;
  out.census = census_pass(component.local(), nullptr, [&](int r, int c, int n) {
    out.boundary.push_back({component.to_global(r, c), n});
  });
  return out;
}

CornerClassification classify_corners(const BinaryGrid& g, std::span<const Point2> component) {
  require_foreground(g, component);
  return classify_corners(ComponentMask(component));
}

std::vector<Point2> boundary_points(const ComponentMask& component) {
  std::vector<Point2> out;
  census_pass(component.local(), nullptr,
              [&](int r, int c, int) { out.push_back(component.to_global(r, c)); });
  return out;
}

std::vector<Point2> boundary_points(const BinaryGrid& g, std::span<const Point2> component) {
  require_foreground(g, component);
  return boundary_points(ComponentMask(component));
}

int direct_neighbor_count(const ComponentMask& component, Point2 p) {
  return component.contains({p.row - 1, p.col}) + component.contains({p.row + 1, p.col}) +
         component.contains({p.row, p.col - 1}) + component.contains({p.row, p.col + 1});
}

std::vector<std::string> annotate_corners(const BinaryGrid& g,
                                          const CornerClassification& classes) {
  std::vector<std::string> rows;
  rows.reserve(static_cast<std::size_t>(g.height()));
  for (int r = 0; r < g.height(); ++r) {
    std::string row(static_cast<std::size_t>(g.width()), '0');
    for (int c = 0; c < g.width(); ++c) {
      if (g.foreground(r, c)) row[static_cast<std::size_t>(c)] = '1';
    }
    rows.push_back(std::move(row));
  }
  for (const auto& cp : classes.boundary) {
    if (!g.in_bounds(cp.point)) continue;
    char& cell = rows[static_cast<std::size_t>(cp.point.row)][static_cast<std::size_t>(cp.point.col)];
    if (cp.direct_neighbors == 2) cell = '2';
    else if (cp.direct_neighbors == 4) cell = '4';
    else if (cp.direct_neighbors < 2) cell = '*';
  }
  return rows;
}

PathologyReport find_pathological(const ComponentMask& component,
                                  const std::function<void(Point2)>& on_window) {
  const RasterView local = component.local();
  PathologyReport report;
  for (int r = 0; r + 1 < local.height; ++r) {
    for (int c = 0; c + 1 < local.width; ++c) {
      ++report.windows_scanned;
      if (on_window) on_window(component.to_global(r, c));
      const bool a = local.at(r, c);
      const bool b = local.at(r, c + 1);
      const bool d = local.at(r + 1, c);
      const bool e = local.at(r + 1, c + 1);
      if ((a && e && !b && !d) || (b && d && !a && !e)) {
        report.windows.push_back(component.to_global(r, c));
      }
    }
  }
  return report;
}

PathologyReport find_pathological(const BinaryGrid& g, std::span<const Point2> component) {
  require_foreground(g, component);
  return find_pathological(ComponentMask(component));
}

std::string_view to_string(ValidityReason reason) noexcept {
  switch (reason) {
    case ValidityReason::isolated_or_thin_point: return "isolated_or_thin_point";
    case ValidityReason::pathological_window: return "pathological_window";
    case ValidityReason::contour_overlap: return "contour_overlap";
    case ValidityReason::border_contact: return "border_contact";
  }
  return "unknown";
}

bool ValidityReport::has(ValidityReason kind) const noexcept {
  return std::any_of(reasons.begin(), reasons.end(),
                     [kind](const ValidityIssue& i) { return i.kind == kind; });
}

ValidityReport validate_component(const BinaryGrid& g, const ComponentMask& component,
                                  ValidationOptions options) {
  ValidityReport report;

  const auto classes = classify_corners(component);
  for (const auto& cp : classes.boundary) {
    if (cp.direct_neighbors < 2) {
      report.reasons.push_back({ValidityReason::isolated_or_thin_point, cp.point});
    }
  }

  for (const auto& w : find_pathological(component).windows) {
    report.reasons.push_back({ValidityReason::pathological_window, w});
  }

  std::map<Point2, int> visits;
  for (const auto& walk : walk_boundaries(component)) {
    for (const auto& p : walk.points) ++visits[p];
  }
  for (const auto& [p, n] : visits) {
    if (n > 1) report.reasons.push_back({ValidityReason::contour_overlap, p});
  }

  if (options.reject_border_contact) {
    for (const auto& p : component.points()) {
      if (p.row == 0 || p.col == 0 || p.row == g.height() - 1 || p.col == g.width() - 1) {
        report.reasons.push_back({ValidityReason::border_contact, p});
      }
    }
  }
  return report;
}

}  // namespace digitopo
