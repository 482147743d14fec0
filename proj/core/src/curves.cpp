#include "digitopo/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "digitopo/corners.hpp"
#include "digitopo/labeling.hpp"

namespace digitopo {

namespace {

// Crack sides of a pixel, clockwise. Walking side s keeps the pixel on the
// right and heads in direction s (E, S, W, N).
constexpr int kStep[4][2] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};

struct Crack {
  int row;
  int col;
  int side;
};

int outward(int side) { return (side + 3) % 4; }

}  // namespace

std::string_view to_string(ContourKind kind) noexcept {
  return kind == ContourKind::outer ? "outer" : "hole";
}

std::vector<BoundaryWalk> walk_boundaries(const ComponentMask& component) {
  const RasterView local = component.local();
  const int h = local.height;
  const int w = local.width;
  auto in_s = [&](int r, int c) { return local.at(r, c); };
  auto is_crack = [&](int r, int c, int side) {
    const int* d = kStep[outward(side)];
    return in_s(r, c) && !in_s(r + d[0], c + d[1]);
  };

  const auto regions = label_components(local, LabelTarget::background);
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(h) * w * 4, 0);
  auto mark = [&](const Crack& k) -> std::uint8_t& {
    return visited[(static_cast<std::size_t>(k.row) * w + k.col) * 4 + k.side];
  };

  std::vector<BoundaryWalk> walks;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      for (int side = 0; side < 4; ++side) {
        Crack start{r, c, side};
        if (!is_crack(r, c, side) || mark(start)) continue;

        BoundaryWalk walk;
        const int* o = kStep[outward(side)];
        walk.region = regions.at({r + o[0], c + o[1]});
        std::vector<Point2> seq;
        Crack cur = start;
        do {
          mark(cur) = 1;
          seq.push_back({cur.row, cur.col});
          const int* step = kStep[cur.side];
          const int r1 = cur.row + step[0];
          const int c1 = cur.col + step[1];
          if (!in_s(r1, c1)) {
            cur = {cur.row, cur.col, (cur.side + 1) % 4};
          } else {
            const int* out = kStep[outward(cur.side)];
            const int rb = r1 + out[0];
            const int cb = c1 + out[1];
            if (!in_s(rb, cb)) {
              cur = {r1, c1, cur.side};
            } else {
              seq.push_back({r1, c1});  // inward corner
              cur = {rb, cb, outward(cur.side)};
            }
          }
        } while (cur.row != start.row || cur.col != start.col || cur.side != start.side);

        for (const auto& p : seq) {
          if (walk.points.empty() || walk.points.back() != component.to_global(p.row, p.col)) {
            walk.points.push_back(component.to_global(p.row, p.col));
          }
        }
        while (walk.points.size() > 1 && walk.points.front() == walk.points.back()) {
          walk.points.pop_back();
        }
        auto first = std::min_element(walk.points.begin(), walk.points.end());
        std::rotate(walk.points.begin(), first, walk.points.end());
        walks.push_back(std::move(walk));
      }
    }
  }
  return walks;
}

std::vector<Contour> trace_contours(const ComponentMask& component) {
  const auto classes = classify_corners(component);
  for (const auto& cp : classes.boundary) {
    if (cp.direct_neighbors < 2) {
      throw TraceError(TraceError::Kind::thin_point, cp.point,
                       "boundary point with fewer than two direct neighbours");
    }
  }
  const auto pathology = find_pathological(component);
  if (!pathology.clean()) {
    throw TraceError(TraceError::Kind::pathological_window, pathology.windows.front(),
                     "pathological 2x2 window on the boundary");
  }

  auto walks = walk_boundaries(component);
  std::map<Point2, int> visits;
  for (const auto& walk : walks) {
    for (const auto& p : walk.points) ++visits[p];
  }
  for (const auto& [p, n] : visits) {
    if (n > 1) {
      throw TraceError(TraceError::Kind::contour_overlap, p,
                       "boundary point shared by more than one curve position");
    }
  }

  std::map<std::size_t, std::size_t> by_region;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    if (!by_region.emplace(walks[i].region, i).second) {
      throw TraceError(TraceError::Kind::contour_overlap, walks[i].points.front(),
                       "complement region bounded by more than one curve");
    }
  }

  const RasterView local = component.local();
  const auto regions = label_components(local, LabelTarget::background);

  std::vector<Contour> contours;
  contours.reserve(walks.size());
  for (const auto& [region, index] : by_region) {
    Contour contour;
    contour.kind = region == 1 ? ContourKind::outer : ContourKind::hole;
    contour.points = std::move(walks[index].points);
    if (contour.kind == ContourKind::hole) {
      const auto& cells = regions.points(static_cast<Label>(region));
      contour.enclosed_region.reserve(cells.size());
      for (const auto& p : cells) contour.enclosed_region.push_back(component.to_global(p.row, p.col));
    } else {
      std::set<Point2> on_curve(contour.points.begin(), contour.points.end());
      for (int r = 0; r < local.height; ++r) {
        for (int c = 0; c < local.width; ++c) {
          if (regions.at({r, c}) == 1) continue;
          Point2 g = component.to_global(r, c);
          if (!on_curve.contains(g)) contour.enclosed_region.push_back(g);
        }
      }
    }
    contours.push_back(std::move(contour));
  }
  return contours;
}

CurveCensus curve_census(const ComponentMask& component, const Contour& contour) {
  CurveCensus census;
  for (const auto& p : contour.points) {
    if (!component.contains(p)) throw std::invalid_argument("contour point outside the component");
    switch (direct_neighbor_count(component, p)) {
      case 2: ++census.cp2; break;
      case 3: ++census.cp3; break;
      case 4: ++census.cp4; break;
      default: ++census.other; break;
    }
  }
  return census;
}

CurveBalance check_curve_balance(std::span<const Point2> curve,
                                 std::optional<std::span<const Point2>> interior) {
  if (curve.size() < 4) throw CurveError("a closed curve needs at least four points");
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point2 a = curve[i];
    const Point2 b = curve[(i + 1) % curve.size()];
    if (std::max(std::abs(a.row - b.row), std::abs(a.col - b.col)) != 1) {
      throw CurveError("curve is not closed: consecutive points are not adjacent");
    }
  }
  std::set<Point2> on_curve(curve.begin(), curve.end());
  if (on_curve.size() != curve.size()) throw CurveError("curve intersects itself");

  std::vector<Point2> filled(curve.begin(), curve.end());
  if (interior) {
    for (const auto& p : *interior) {
      if (on_curve.contains(p)) throw CurveError("interior point lies on the curve");
      filled.push_back(p);
    }
  } else {
    // Everything the outside flood cannot reach is inside.
    const ComponentMask barrier(curve);
    const RasterView local = barrier.local();
    const auto outside = label_components(local, LabelTarget::background);
    for (int r = 0; r < local.height; ++r) {
      for (int c = 0; c < local.width; ++c) {
        if (!local.at(r, c) && outside.at({r, c}) != 1) filled.push_back(barrier.to_global(r, c));
      }
    }
  }

  const ComponentMask shape(filled);
  if (!find_pathological(shape).clean()) throw CurveError("curve has a pathological window");

  CurveBalance balance;
  for (const auto& p : curve) {
    const int n = direct_neighbor_count(shape, p);
    if (n == 2) ++balance.cp2;
    if (n == 4) ++balance.cp4;
  }
  balance.holds = balance.cp2 == balance.cp4 + 4;
  return balance;
}

HoleAccounting hole_accounting(const ComponentMask& component) {
  const auto contours = trace_contours(component);
  return hole_accounting(component, contours);
}

HoleAccounting hole_accounting(const ComponentMask& component,
                               std::span<const Contour> contours) {
  HoleAccounting acc;
  CurveCensus total;
  for (const auto& contour : contours) {
    const auto census = curve_census(component, contour);
    const auto cp2 = static_cast<long long>(census.cp2);
    const auto cp4 = static_cast<long long>(census.cp4);
    ContourBalance balance{contour.kind, census, false};
    balance.holds = contour.kind == ContourKind::outer ? cp2 - cp4 == 4 : cp4 - cp2 == 4;
    acc.contours.push_back(balance);
    if (contour.kind == ContourKind::hole) ++acc.holes;
    total.cp2 += census.cp2;
    total.cp3 += census.cp3;
    total.cp4 += census.cp4;
    total.other += census.other;
  }
  const auto census = corner_census(component);
  acc.totals_match = total.cp2 == census.c2 && total.cp3 == census.c3 &&
                     total.cp4 == census.c4 && total.other == census.degenerate;
  acc.lhs = static_cast<long long>(total.cp4) - static_cast<long long>(total.cp2);
  acc.rhs = -4 + 4LL * acc.holes;
  acc.holds = acc.lhs == acc.rhs;
  return acc;
}

}  // namespace digitopo
