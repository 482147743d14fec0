#include "digitopo/gen.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>

#include "digitopo/component.hpp"
#include "digitopo/corners.hpp"

namespace digitopo {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // Largest multiple of n that fits; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

int Rng::between(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

Box ring_of(const HoleSpec& h) {
  return {h.position.row - 1, h.position.col - 1, h.height + 2, h.width + 2};
}

bool overlaps(const Box& a, const Box& b) {
  return a.row0 < b.row0 + b.rows && b.row0 < a.row0 + a.rows && a.col0 < b.col0 + b.cols &&
         b.col0 < a.col0 + a.cols;
}

// Ring strictly inside the rectangle, i.e. clear of its outermost cells.
bool ring_inside(const Box& ring, int height, int width) {
  return ring.row0 >= 1 && ring.col0 >= 1 && ring.row0 + ring.rows <= height - 1 &&
         ring.col0 + ring.cols <= width - 1;
}

std::size_t index_of(int r, int c, int width) {
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
         static_cast<std::size_t>(c);
}

std::vector<Point2> foreground_points(const std::vector<std::uint8_t>& cells, int width) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i]) pts.push_back({static_cast<int>(i / width), static_cast<int>(i % width)});
  }
  return pts;
}

// Row-major-first background cell among `candidates` that lies in the grid.
std::optional<Point2> first_background(const std::vector<std::uint8_t>& cells, int height,
                                       int width, std::vector<Point2> candidates) {
  std::sort(candidates.begin(), candidates.end());
  for (const auto& q : candidates) {
    if (q.row < 0 || q.col < 0 || q.row >= height || q.col >= width) continue;
    if (!cells[index_of(q.row, q.col, width)]) return q;
  }
  return std::nullopt;
}

std::optional<Point2> repair_cell(const std::vector<std::uint8_t>& cells, int height, int width,
                                  const ValidityIssue& issue) {
  const Point2 p = issue.at;
  if (issue.kind == ValidityReason::pathological_window) {
    return first_background(cells, height, width,
                            {p, {p.row, p.col + 1}, {p.row + 1, p.col}, {p.row + 1, p.col + 1}});
  }
  auto direct = first_background(
      cells, height, width,
      {{p.row - 1, p.col}, {p.row, p.col - 1}, {p.row, p.col + 1}, {p.row + 1, p.col}});
  if (direct) return direct;
  return first_background(cells, height, width,
                          {{p.row - 1, p.col - 1},
                           {p.row - 1, p.col + 1},
                           {p.row + 1, p.col - 1},
                           {p.row + 1, p.col + 1}});
}

std::optional<BinaryGrid> grow_blob(Rng& rng, int height, int width, std::size_t target) {
  constexpr int kRepairCap = 256;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(height) * width, 0);
  // Block (r, c) covers rows r..r+1 and cols c..c+1, kept off the outer ring.
  const int block_rows = height - 3;
  const int block_cols = width - 3;
  std::vector<std::uint8_t> placed(static_cast<std::size_t>(block_rows) * block_cols, 0);
  std::vector<Point2> frontier;
  std::size_t area = 0;

  auto place = [&](Point2 b) {
    placed[index_of(b.row - 1, b.col - 1, block_cols)] = 1;
    for (int dr = 0; dr < 2; ++dr) {
      for (int dc = 0; dc < 2; ++dc) {
        auto& cell = cells[index_of(b.row + dr, b.col + dc, width)];
        if (!cell) ++area;
        cell = 1;
      }
    }
    const Point2 next[4] = {{b.row - 1, b.col}, {b.row + 1, b.col}, {b.row, b.col - 1},
                            {b.row, b.col + 1}};
    for (const auto& n : next) {
      if (n.row >= 1 && n.col >= 1 && n.row <= block_rows && n.col <= block_cols &&
          !placed[index_of(n.row - 1, n.col - 1, block_cols)]) {
        frontier.push_back(n);
      }
    }
  };

  place({rng.between(1, block_rows), rng.between(1, block_cols)});
  while (area < target && !frontier.empty()) {
    const std::size_t pick = rng.below(frontier.size());
    const Point2 b = frontier[pick];
    frontier[pick] = frontier.back();
    frontier.pop_back();
    if (!placed[index_of(b.row - 1, b.col - 1, block_cols)]) place(b);
  }

  for (int iter = 0; iter < kRepairCap; ++iter) {
    BinaryGrid grid(height, width, cells);
    const auto points = foreground_points(cells, width);
    const ComponentMask mask(points);
    const auto report = validate_component(grid, mask);
    if (report.valid()) return grid;
    std::set<Point2> fills;
    for (const auto& issue : report.reasons) {
      if (auto q = repair_cell(cells, height, width, issue)) fills.insert(*q);
    }
    if (fills.empty()) return std::nullopt;
    for (const auto& q : fills) cells[index_of(q.row, q.col, width)] = 1;
  }
  return std::nullopt;
}

}  // namespace

BinaryGrid gen_rect_with_holes(const ShapeSpec& spec) {
  if (spec.height <= 0 || spec.width <= 0) {
    throw std::invalid_argument("rectangle dimensions must be positive");
  }
  // Ring cells claimed so far; marking costs the ring area, so large hole
  // lattices stay linear.
  std::vector<std::uint8_t> claimed(static_cast<std::size_t>(spec.height) * spec.width, 0);
  for (const auto& h : spec.holes) {
    if (h.height < 1 || h.width < 1) throw std::invalid_argument("hole sizes must be positive");
    const Box ring = ring_of(h);
    if (!ring_inside(ring, spec.height, spec.width)) {
      throw std::invalid_argument("hole ring touches the rectangle boundary");
    }
    for (int r = ring.row0; r < ring.row0 + ring.rows; ++r) {
      for (int c = ring.col0; c < ring.col0 + ring.cols; ++c) {
        auto& cell = claimed[index_of(r, c, spec.width)];
        if (cell) throw std::invalid_argument("hole rings overlap");
        cell = 1;
      }
    }
  }
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(spec.height) * spec.width, 1);
  for (const auto& h : spec.holes) {
    for (int r = 0; r < h.height; ++r) {
      for (int c = 0; c < h.width; ++c) {
        cells[index_of(h.position.row + r, h.position.col + c, spec.width)] = 0;
      }
    }
  }
  return BinaryGrid(spec.height, spec.width, std::move(cells));
}

ShapeSpec sample_rect_spec(Rng& rng, int height, int width, int hole_count) {
  constexpr int kTries = 200;
  ShapeSpec spec;
  spec.kind = ShapeKind::rect_with_holes;
  spec.height = height;
  spec.width = width;
  std::vector<Box> rings;
  for (int k = 0; k < hole_count; ++k) {
    for (int t = 0; t < kTries; ++t) {
      HoleSpec h;
      h.height = rng.between(1, 3);
      h.width = rng.between(1, 3);
      // Top-left range keeping the ring inside: rows 2 .. height - 3 - (h - 1).
      const int max_row = height - 2 - h.height;
      const int max_col = width - 2 - h.width;
      if (max_row < 2 || max_col < 2) continue;
      h.position = {rng.between(2, max_row), rng.between(2, max_col)};
      const Box ring = ring_of(h);
      if (std::any_of(rings.begin(), rings.end(),
                      [&](const Box& other) { return overlaps(ring, other); })) {
        continue;
      }
      rings.push_back(ring);
      spec.holes.push_back(h);
      break;
    }
  }
  return spec;
}

BinaryGrid gen_random_blob(const ShapeSpec& spec) {
  constexpr int kAttempts = 16;
  if (spec.height < 4 || spec.width < 4) {
    throw std::invalid_argument("random blobs need at least a 4x4 grid");
  }
  const std::size_t capacity =
      static_cast<std::size_t>(spec.height - 2) * static_cast<std::size_t>(spec.width - 2);
  const std::size_t target = spec.target_area.value_or(capacity / 2);
  if (target > capacity) throw std::invalid_argument("target area exceeds grid capacity");

  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    if (auto grid = grow_blob(rng, spec.height, spec.width, target)) return *grid;
  }
  throw GenerationError("blob repair did not converge");
}

std::vector<NamedFixture> reference_fixtures() {
  return {
      {"blob8", BinaryGrid::from_rows({"00000000", "00111100", "01111100", "01110000",
                                       "00110000", "00111000", "00111000", "00000000"})},
      {"frame8", BinaryGrid::from_rows({"00000000", "00111111", "01111111", "01110011",
                                        "01110011", "00111111", "00111111", "00000000"})},
  };
}

BinaryGrid fixture(std::string_view name) {
  for (auto& f : reference_fixtures()) {
    if (f.name == name) return f.grid;
  }
  throw std::out_of_range("unknown fixture: " + std::string(name));
}

std::vector<std::string> blob8_annotations() {
  return {"00000000", "00211200", "02441200", "02410000",
          "00110000", "00142000", "00212000", "00000000"};
}

}  // namespace digitopo
