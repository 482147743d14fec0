#include "digitopo/grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

namespace digitopo {

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << p.row << ',' << p.col << ')';
}

ParseError::ParseError(const std::string& what, std::size_t offset, std::size_t line,
                       std::size_t column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + " (byte " + std::to_string(offset) + ")"),
      offset_(offset),
      line_(line),
      column_(column) {}

namespace {

void check_dims(int height, int width) {
  if (height <= 0 || width <= 0) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  if (static_cast<long long>(height) * width > std::numeric_limits<int>::max()) {
    throw std::invalid_argument("grid too large");
  }
}

std::size_t area_of(int height, int width) {
  return static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
}

// Cursor over the input that knows its line/column for error messages.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t pos() const { return pos_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // Whitespace and '#' comments.
  void skip_blank() {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_, line_, col_);
  }

  int read_positive(const char* what) {
    skip_blank();
    if (done()) fail(std::string("unexpected end of input, expected ") + what);
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (start == pos_) fail(std::string("expected ") + what);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || value <= 0) {
      throw ParseError(std::string("invalid ") + what, start, line_, col_ - (pos_ - start));
    }
    if (!done() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '#') {
      fail(std::string("illegal character in ") + what);
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

BinaryGrid parse_pbm(std::string_view bytes) {
  Cursor cur(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '1') {
    cur.fail("malformed header: missing P1 magic");
  }
  cur.advance();
  cur.advance();
  if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())) &&
      cur.peek() != '#') {
    cur.fail("malformed header: junk after magic");
  }
  int width = cur.read_positive("width");
  int height = cur.read_positive("height");
  try {
    check_dims(height, width);
  } catch (const std::invalid_argument& e) {
    cur.fail(std::string("malformed header: ") + e.what());
  }

  std::vector<std::uint8_t> cells;
  cells.reserve(area_of(height, width));
  const std::size_t expected = area_of(height, width);
  while (cells.size() < expected) {
    cur.skip_blank();
    if (cur.done()) {
      cur.fail("dimension mismatch: raster has " + std::to_string(cells.size()) +
               " pixels, header declares " + std::to_string(expected));
    }
    char c = cur.peek();
    if (c != '0' && c != '1') cur.fail(std::string("illegal character '") + c + "' in raster");
    cells.push_back(c == '1' ? 1 : 0);
    cur.advance();
  }
  cur.skip_blank();
  if (!cur.done()) cur.fail("dimension mismatch: trailing data after raster");
  return BinaryGrid(height, width, std::move(cells));
}

BinaryGrid parse_ascii01(std::string_view bytes) {
  std::vector<std::uint8_t> cells;
  int width = -1;
  int height = 0;
  std::size_t pos = 0;
  std::size_t line = 1;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view row = bytes.substr(pos, end - pos);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    if (row.empty()) {
      // Blank lines are only allowed at the very end.
      std::size_t rest = end;
      while (rest < bytes.size() && (bytes[rest] == '\n' || bytes[rest] == '\r')) ++rest;
      if (rest < bytes.size()) throw ParseError("empty line inside image", pos, line, 1);
      break;
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != '0' && row[i] != '1') {
        throw ParseError(std::string("illegal character '") + row[i] + "'", pos + i, line, i + 1);
      }
      cells.push_back(row[i] == '1' ? 1 : 0);
    }
    if (width < 0) {
      width = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != width) {
      throw ParseError("dimension mismatch: row has " + std::to_string(row.size()) +
                           " cells, expected " + std::to_string(width),
                       pos, line, 1);
    }
    ++height;
    ++line;
    pos = end + 1;
  }
  if (height == 0) throw ParseError("empty image", 0, 1, 1);
  return BinaryGrid(height, width, std::move(cells));
}

}  // namespace

BinaryGrid::BinaryGrid(int height, int width) : height_(height), width_(width) {
  check_dims(height, width);
  cells_.assign(area_of(height, width), 0);
}

BinaryGrid::BinaryGrid(int height, int width, std::vector<std::uint8_t> cells)
    : height_(height), width_(width), cells_(std::move(cells)) {
  check_dims(height, width);
  if (cells_.size() != area_of(height, width)) {
    throw std::invalid_argument("cell count does not match dimensions");
  }
  for (auto& c : cells_) c = c != 0 ? 1 : 0;
}

BinaryGrid BinaryGrid::from_rows(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> copy(rows.begin(), rows.end());
  return from_rows(std::span<const std::string>(copy));
}

BinaryGrid BinaryGrid::from_rows(std::span<const std::string> rows) {
  std::string text;
  for (const auto& r : rows) {
    text += r;
    text += '\n';
  }
  return parse_ascii01(text);
}

std::size_t BinaryGrid::foreground_count() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

ImageFormat detect_format(std::string_view bytes) noexcept {
  return bytes.starts_with("P1") ? ImageFormat::pbm_p1 : ImageFormat::ascii01;
}

BinaryGrid parse_image(std::string_view bytes, ImageFormat format) {
  return format == ImageFormat::pbm_p1 ? parse_pbm(bytes) : parse_ascii01(bytes);
}

std::string to_ascii01(const BinaryGrid& g) {
  std::string out;
  out.reserve(g.size() + static_cast<std::size_t>(g.height()));
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) out += g.foreground(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string to_pbm(const BinaryGrid& g) {
  // Plain PBM lines should stay under 70 characters.
  constexpr int kPerLine = 35;
  std::ostringstream os;
  os << "P1\n" << g.width() << ' ' << g.height() << '\n';
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) {
      if (c > 0) os << ((c % kPerLine == 0) ? '\n' : ' ');
      os << (g.foreground(r, c) ? '1' : '0');
    }
    os << '\n';
  }
  return os.str();
}

std::string serialize_image(const BinaryGrid& g, ImageFormat format) {
  return format == ImageFormat::pbm_p1 ? to_pbm(g) : to_ascii01(g);
}

BinaryGrid pad_background(const BinaryGrid& g, int margin) {
  if (margin < 1) throw std::invalid_argument("padding margin must be >= 1");
  const int h = g.height() + 2 * margin;
  const int w = g.width() + 2 * margin;
  std::vector<std::uint8_t> cells(area_of(h, w), 0);
  for (int r = 0; r < g.height(); ++r) {
    auto src = g.cells().subspan(static_cast<std::size_t>(r) * g.width(), g.width());
    std::copy(src.begin(), src.end(),
              cells.begin() + static_cast<std::ptrdiff_t>(r + margin) * w + margin);
  }
  return BinaryGrid(h, w, std::move(cells));
}

std::vector<Point2> neighbors(const BinaryGrid& g, Point2 p, Adjacency mode) {
  if (!g.in_bounds(p)) throw std::out_of_range("point outside grid");
  std::vector<Point2> out;
  out.reserve(8);
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      if (mode == Adjacency::direct && dr != 0 && dc != 0) continue;
      Point2 q{p.row + dr, p.col + dc};
      if (g.in_bounds(q)) out.push_back(q);
    }
  }
  return out;
}

}  // namespace digitopo
