#pragma once

// Synthetic shapes with known topology, for property tests and benchmarks.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "digitopo/grid.hpp"

namespace digitopo {

// Seeded generator: MT19937-64 as specified by the C++ standard, with
// bounded draws by rejection sampling so sequences are identical on every
// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  int between(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

struct HoleSpec {
  Point2 position;  // top-left cell of the hole
  int height = 1;
  int width = 1;
};

enum class ShapeKind { rect_with_holes, random_blob };

struct ShapeSpec {
  ShapeKind kind = ShapeKind::rect_with_holes;
  int height = 0;
  int width = 0;
  std::vector<HoleSpec> holes;
  std::uint64_t seed = 0;
  std::optional<std::size_t> target_area;
};

// The whole grid is the rectangle; each hole is a background rectangle.
// Holes must keep their one-cell rings disjoint from each other and inside
// the rectangle's interior. Throws std::invalid_argument otherwise.
BinaryGrid gen_rect_with_holes(const ShapeSpec& spec);

// Random hole layout satisfying gen_rect_with_holes' constraints; holes are
// 1..3 cells on a side. May return fewer holes than asked when the rectangle
// is crowded.
ShapeSpec sample_rect_spec(Rng& rng, int height, int width, int hole_count);

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A single valid 4-connected component grown by random accretion of 2x2
// blocks inside a one-cell background margin, then repaired by filling
// offending background cells until it validates. Throws GenerationError if
// no attempt converges.
BinaryGrid gen_random_blob(const ShapeSpec& spec);

struct NamedFixture {
  std::string name;
  BinaryGrid grid;
};

// "blob8": 8x8 component without holes (c2 = 8, c4 = 4).
// "frame8": 8x8 component with one 2x2 hole touching the right border
// (c2 = 6, c4 = 6).
std::vector<NamedFixture> reference_fixtures();
// Throws std::out_of_range for unknown names.
BinaryGrid fixture(std::string_view name);
// Expected corner annotation of blob8 (see annotate_corners).
std::vector<std::string> blob8_annotations();

}  // namespace digitopo
