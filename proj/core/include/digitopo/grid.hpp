#pragma once

// Binary images over the 2D integer lattice.
//
// Coordinates are (row, col), row-major, matching the way images are
// written down as matrices. A lattice point (x, y) corresponds to
// (row = y, col = x).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace digitopo {

struct Point2 {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Point2&, const Point2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point2& p);

enum class Adjacency {
  direct,    // L1 distance 1 (4-adjacency)
  indirect,  // Linf distance 1 (8-adjacency); includes direct
};

enum class ImageFormat { pbm_p1, ascii01 };

// Read-only row-major raster; nonzero cells are members, anything outside
// [0,height) x [0,width) counts as background.
struct RasterView {
  std::span<const std::uint8_t> cells;
  int height = 0;
  int width = 0;

  bool at(int row, int col) const noexcept {
    if (row < 0 || col < 0 || row >= height || col >= width) return false;
    return cells[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                 static_cast<std::size_t>(col)] != 0;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line,
             std::size_t column);

  // 0-based byte offset, 1-based line and column.
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

// Immutable binary image; cell value 1 is foreground.
class BinaryGrid {
 public:
  BinaryGrid(int height, int width);
  BinaryGrid(int height, int width, std::vector<std::uint8_t> cells);

  // Rows of '0'/'1' characters, e.g. from_rows({"0110", "0110"}).
  static BinaryGrid from_rows(std::initializer_list<std::string_view> rows);
  static BinaryGrid from_rows(std::span<const std::string> rows);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  std::size_t size() const noexcept { return cells_.size(); }

  bool in_bounds(Point2 p) const noexcept {
    return p.row >= 0 && p.col >= 0 && p.row < height_ && p.col < width_;
  }
  // Out-of-bounds points are background.
  bool foreground(Point2 p) const noexcept { return raster().at(p.row, p.col); }
  bool foreground(int row, int col) const noexcept { return raster().at(row, col); }

  std::span<const std::uint8_t> cells() const noexcept { return cells_; }
  RasterView raster() const noexcept { return {cells_, height_, width_}; }
  std::size_t foreground_count() const noexcept;

  friend bool operator==(const BinaryGrid&, const BinaryGrid&) = default;

 private:
  int height_;
  int width_;
  std::vector<std::uint8_t> cells_;
};

BinaryGrid parse_image(std::string_view bytes, ImageFormat format);

// Picks the format from the first bytes: "P1" means PBM, anything else ascii01.
ImageFormat detect_format(std::string_view bytes) noexcept;

std::string to_ascii01(const BinaryGrid& g);
std::string to_pbm(const BinaryGrid& g);
std::string serialize_image(const BinaryGrid& g, ImageFormat format);

// Surrounds g with `margin` rows/columns of background. Throws
// std::invalid_argument when margin < 1.
BinaryGrid pad_background(const BinaryGrid& g, int margin);

// In-bounds neighbours of p in row-major order. Throws std::out_of_range
// when p is outside the grid.
std::vector<Point2> neighbors(const BinaryGrid& g, Point2 p, Adjacency mode);

}  // namespace digitopo
