#pragma once

// Doubling a 2D component into a two-layer voxel solid and measuring the
// genus of its boundary surface two ways: from the surface-point census and
// from the Euler characteristic.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "digitopo/component.hpp"
#include "digitopo/grid.hpp"

namespace digitopo {

struct Point3 {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr auto operator<=>(const Point3&, const Point3&) = default;
};

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

class VoxelSolid {
 public:
  explicit VoxelSolid(std::vector<Point3> points);

  // Sorted, unique.
  const std::vector<Point3>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(Point3 p) const;

 private:
  std::vector<Point3> points_;
  std::unordered_set<std::uint64_t> index_;
};

// Unit square with minimum corner `origin`, spanned by the two axes other
// than `normal`. `outward_positive` tells which side the solid is not on.
struct Face {
  Point3 origin;
  Axis normal = Axis::z;
  bool outward_positive = true;

  friend bool operator==(const Face&, const Face&) = default;
};

// Unit segment from origin to origin + e_direction.
struct Edge {
  Point3 origin;
  Axis direction = Axis::x;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Boundary of the union of solid unit cubes. A cube is solid when all eight
// of its corner points belong to the solid.
struct SurfaceComplex {
  std::vector<Point3> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
};

struct SurfaceCensus {
  std::size_t m3 = 0;
  std::size_t m4 = 0;
  std::size_t m5 = 0;
  std::size_t m6 = 0;
  std::size_t other = 0;

  friend bool operator==(const SurfaceCensus&, const SurfaceCensus&) = default;
};

class InvalidSurface : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown by extract_surface when no unit cube is fully occupied.
class NoSolidCell : public InvalidSurface {
 public:
  using InvalidSurface::InvalidSurface;
};

struct SurfacePiece {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long long euler = 0;  // V - E + F
};

class MultipleSurfaces : public InvalidSurface {
 public:
  MultipleSurfaces(const std::string& what, std::vector<SurfacePiece> pieces)
      : InvalidSurface(what), pieces_(std::move(pieces)) {}
  const std::vector<SurfacePiece>& pieces() const noexcept { return pieces_; }

 private:
  std::vector<SurfacePiece> pieces_;
};

// Two identical layers: point (row, col) becomes (col, row, 1) and (col, row, 2).
VoxelSolid double_component(const ComponentMask& component);
VoxelSolid double_component(const BinaryGrid& g, std::span<const Point2> component);

// Throws NoSolidCell, or InvalidSurface for an edge shared by more than two
// boundary faces.
SurfaceComplex extract_surface(const VoxelSolid& solid);

// Degree of each vertex along surface edges, tallied into m3..m6. In strict
// mode a degree outside 3..6 throws InvalidSurface; otherwise it is counted in
// `other`.
SurfaceCensus classify_surface_points(const SurfaceComplex& surface, bool strict = true);

// m3 == 8 + m5 + 2 m6, which holds on genus-0 surfaces.
bool satisfies_sphere_identity(const SurfaceCensus& census) noexcept;

// g = 1 + (m5 + 2 m6 - m3) / 8; throws InvalidSurface if not an integer.
int genus_by_formula(const SurfaceCensus& census);

// Face-connected pieces of the surface with their Euler characteristics.
std::vector<SurfacePiece> surface_components(const SurfaceComplex& surface);

// (2 - (V - E + F)) / 2 for a single closed surface. Throws InvalidSurface
// for non-manifold edges and MultipleSurfaces when there is more than one
// piece.
int euler_genus_oracle(const SurfaceComplex& surface);

// Wavefront OBJ text: one vertex per line, quads oriented outward.
void write_obj(std::ostream& os, const SurfaceComplex& surface);

}  // namespace digitopo
