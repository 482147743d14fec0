#include "digitopo/solid3d.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>
#include <ostream>
#include <string>
#include <unordered_map>

namespace digitopo {

namespace {

constexpr int kCoordBits = 20;
constexpr int kCoordOffset = 1 << (kCoordBits - 1);

std::uint64_t pack(Point3 p) {
  auto field = [](int v) {
    const long long shifted = static_cast<long long>(v) + kCoordOffset;
    if (shifted < 0 || shifted >= (1LL << kCoordBits)) {
      throw std::out_of_range("voxel coordinate out of range");
    }
    return static_cast<std::uint64_t>(shifted);
  };
  return (field(p.x) << (2 * kCoordBits)) | (field(p.y) << kCoordBits) | field(p.z);
}

std::uint64_t pack(const Edge& e) {
  return (pack(e.origin) << 2) | static_cast<std::uint64_t>(e.direction);
}

Point3 step(Point3 p, int axis, int by = 1) {
  if (axis == 0) p.x += by;
  else if (axis == 1) p.y += by;
  else p.z += by;
  return p;
}

struct FaceFrame {
  int u;
  int v;
};

FaceFrame frame(Axis normal) {
  const int a = static_cast<int>(normal);
  return {(a + 1) % 3, (a + 2) % 3};
}

std::array<Edge, 4> face_edges(const Face& f) {
  const auto [u, v] = frame(f.normal);
  return {Edge{f.origin, static_cast<Axis>(u)}, Edge{step(f.origin, v), static_cast<Axis>(u)},
          Edge{f.origin, static_cast<Axis>(v)}, Edge{step(f.origin, u), static_cast<Axis>(v)}};
}

// Corners in cyclic order around the square.
std::array<Point3, 4> face_corners(const Face& f) {
  const auto [u, v] = frame(f.normal);
  return {f.origin, step(f.origin, u), step(step(f.origin, u), v), step(f.origin, v)};
}

bool edge_less(const Edge& a, const Edge& b) {
  return std::tie(a.origin, a.direction) < std::tie(b.origin, b.direction);
}

bool face_less(const Face& a, const Face& b) {
  return std::tie(a.origin, a.normal, a.outward_positive) <
         std::tie(b.origin, b.normal, b.outward_positive);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

VoxelSolid::VoxelSolid(std::vector<Point3> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  index_.reserve(points_.size());
  for (const auto& p : points_) index_.insert(pack(p));
}

bool VoxelSolid::contains(Point3 p) const { return index_.contains(pack(p)); }

VoxelSolid double_component(const ComponentMask& component) {
  std::vector<Point3> pts;
  pts.reserve(2 * component.area());
  for (const auto& p : component.points()) {
    pts.push_back({p.col, p.row, 1});
    pts.push_back({p.col, p.row, 2});
  }
  return VoxelSolid(std::move(pts));
}

VoxelSolid double_component(const BinaryGrid& g, std::span<const Point2> component) {
  for (const auto& p : component) {
    if (!g.foreground(p)) throw std::invalid_argument("component point is not foreground");
  }
  return double_component(ComponentMask(component));
}

SurfaceComplex extract_surface(const VoxelSolid& solid) {
  std::vector<Point3> cubes;
  std::unordered_set<std::uint64_t> cube_index;
  for (const auto& p : solid.points()) {
    bool full = true;
    for (int corner = 1; corner < 8 && full; ++corner) {
      Point3 q{p.x + (corner & 1), p.y + ((corner >> 1) & 1), p.z + ((corner >> 2) & 1)};
      full = solid.contains(q);
    }
    if (full) {
      cubes.push_back(p);
      cube_index.insert(pack(p));
    }
  }
  if (cubes.empty()) throw NoSolidCell("solid contains no fully occupied unit cube");

  SurfaceComplex sc;
  for (const auto& c : cubes) {
    for (int a = 0; a < 3; ++a) {
      if (!cube_index.contains(pack(step(c, a, -1)))) {
        sc.faces.push_back({c, static_cast<Axis>(a), false});
      }
      if (!cube_index.contains(pack(step(c, a, 1)))) {
        sc.faces.push_back({step(c, a), static_cast<Axis>(a), true});
      }
    }
  }
  std::sort(sc.faces.begin(), sc.faces.end(), face_less);

  std::unordered_map<std::uint64_t, int> edge_faces;
  std::unordered_set<std::uint64_t> vertex_index;
  for (const auto& f : sc.faces) {
    for (const auto& e : face_edges(f)) {
      if (++edge_faces[pack(e)] == 1) sc.edges.push_back(e);
    }
    for (const auto& v : face_corners(f)) {
      if (vertex_index.insert(pack(v)).second) sc.vertices.push_back(v);
    }
  }
  for (const auto& e : sc.edges) {
    if (edge_faces[pack(e)] > 2) {
      throw InvalidSurface("non-manifold edge at (" + std::to_string(e.origin.x) + "," +
                           std::to_string(e.origin.y) + "," + std::to_string(e.origin.z) +
                           ") shared by " + std::to_string(edge_faces[pack(e)]) + " faces");
    }
  }
  std::sort(sc.edges.begin(), sc.edges.end(), edge_less);
  std::sort(sc.vertices.begin(), sc.vertices.end());
  return sc;
}

SurfaceCensus classify_surface_points(const SurfaceComplex& surface, bool strict) {
  std::unordered_map<std::uint64_t, int> degree;
  degree.reserve(surface.vertices.size());
  for (const auto& e : surface.edges) {
    ++degree[pack(e.origin)];
    ++degree[pack(step(e.origin, static_cast<int>(e.direction)))];
  }
  SurfaceCensus census;
  for (const auto& v : surface.vertices) {
    switch (degree[pack(v)]) {
      case 3: ++census.m3; break;
      case 4: ++census.m4; break;
      case 5: ++census.m5; break;
      case 6: ++census.m6; break;
      default:
        if (strict) {
          throw InvalidSurface("surface point (" + std::to_string(v.x) + "," +
                               std::to_string(v.y) + "," + std::to_string(v.z) + ") has " +
                               std::to_string(degree[pack(v)]) + " surface neighbours");
        }
        ++census.other;
    }
  }
  return census;
}

bool satisfies_sphere_identity(const SurfaceCensus& c) noexcept { return c.m3 == 8 + c.m5 + 2 * c.m6; }

int genus_by_formula(const SurfaceCensus& c) {
  const long long num = static_cast<long long>(c.m5) + 2LL * static_cast<long long>(c.m6) -
                        static_cast<long long>(c.m3);
  if (num % 8 != 0) {
    throw InvalidSurface("m5 + 2 m6 - m3 = " + std::to_string(num) + " is not a multiple of 8");
  }
  return static_cast<int>(1 + num / 8);
}

std::vector<SurfacePiece> surface_components(const SurfaceComplex& surface) {
  const std::size_t n = surface.faces.size();
  DisjointSets sets(n);
  std::unordered_map<std::uint64_t, std::size_t> first_face;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : face_edges(surface.faces[i])) {
      auto [it, inserted] = first_face.emplace(pack(e), i);
      if (!inserted) sets.unite(it->second, i);
    }
  }

  std::unordered_map<std::size_t, std::size_t> piece_of_root;
  std::vector<SurfacePiece> pieces;
  std::vector<std::unordered_set<std::uint64_t>> piece_edges;
  std::vector<std::unordered_set<std::uint64_t>> piece_vertices;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find(i);
    auto [it, inserted] = piece_of_root.emplace(root, pieces.size());
    if (inserted) {
      pieces.emplace_back();
      piece_edges.emplace_back();
      piece_vertices.emplace_back();
    }
    const std::size_t k = it->second;
    ++pieces[k].faces;
    for (const auto& e : face_edges(surface.faces[i])) piece_edges[k].insert(pack(e));
    for (const auto& v : face_corners(surface.faces[i])) piece_vertices[k].insert(pack(v));
  }
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    pieces[k].edges = piece_edges[k].size();
    pieces[k].vertices = piece_vertices[k].size();
    pieces[k].euler = static_cast<long long>(pieces[k].vertices) -
                      static_cast<long long>(pieces[k].edges) +
                      static_cast<long long>(pieces[k].faces);
  }
  return pieces;
}

int euler_genus_oracle(const SurfaceComplex& surface) {
  std::unordered_map<std::uint64_t, int> edge_faces;
  for (const auto& f : surface.faces) {
    for (const auto& e : face_edges(f)) ++edge_faces[pack(e)];
  }
  for (const auto& [key, count] : edge_faces) {
    if (count != 2) {
      throw InvalidSurface("surface is not a closed manifold: an edge lies in " +
                           std::to_string(count) + " faces");
    }
  }
  auto pieces = surface_components(surface);
  if (pieces.size() != 1) {
    std::string what = "surface has " + std::to_string(pieces.size()) + " pieces; euler:";
    for (const auto& p : pieces) what += " " + std::to_string(p.euler);
    throw MultipleSurfaces(what, std::move(pieces));
  }
  const long long chi = pieces.front().euler;
  if ((2 - chi) % 2 != 0) throw InvalidSurface("odd Euler characteristic");
  return static_cast<int>((2 - chi) / 2);
}

void write_obj(std::ostream& os, const SurfaceComplex& surface) {
  std::unordered_map<std::uint64_t, std::size_t> number;
  os << "# " << surface.vertices.size() << " vertices, " << surface.faces.size() << " faces\n";
  for (std::size_t i = 0; i < surface.vertices.size(); ++i) {
    const auto& v = surface.vertices[i];
    number[pack(v)] = i + 1;
    os << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
  }
  for (const auto& f : surface.faces) {
    auto corners = face_corners(f);
    // Corners run counterclockwise around +normal; flip for inward-facing sides.
    if (!f.outward_positive) std::reverse(corners.begin(), corners.end());
    os << 'f';
    for (const auto& c : corners) os << ' ' << number.at(pack(c));
    os << '\n';
  }
}

}  // namespace digitopo
