#pragma once

// Triangular-lattice regions, height functions and lozenge tilings.
//
// Vertices use axial coordinates (u, v). The positive edge directions are
// e1 = (1,0), e2 = (0,1) and the diagonal e1 + e2. A height function changes
// by 0 or 1 along every positive edge. Unit triangles come in two kinds:
//   A(v) = {v, v+e1, v+e1+e2},   B(v) = {v, v+e2, v+e1+e2}.
// Every lozenge is one A triangle glued to one B triangle:
//   type 1: A(v) + B(v-e2), center v + (1/2, 0)    (e1 edges rise by 1)
//   type 2: A(v) + B(v+e1), center v + (1, 1/2)    (e2 edges rise by 1)
//   type 3: A(v) + B(v),    center v + (1/2, 1/2)  (flat; the horizontal tile)

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewtab/shapes.hpp"

namespace skewtab {

struct Vertex {
  int u = 0;
  int v = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend Vertex operator+(Vertex a, Vertex b) { return {a.u + b.u, a.v + b.v}; }
  friend Vertex operator-(Vertex a, Vertex b) { return {a.u - b.u, a.v - b.v}; }
};

inline constexpr Vertex kE1{1, 0};
inline constexpr Vertex kE2{0, 1};
inline constexpr Vertex kDiag{1, 1};

enum class TriangleKind : std::uint8_t { A, B };

struct Triangle {
  Vertex anchor;
  TriangleKind kind = TriangleKind::A;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Raised when heights violate the edge rule or do not describe a tiling.
class InvalidHeight : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite union of unit triangles plus an optional mask of positions where a
/// type-3 lozenge is forbidden. The mask is a constraint on diagonal edges:
/// a forbidden type-3 position at anchor v forces h(v+e1+e2) - h(v) = 1.
class Region {
 public:
  Region(std::span<const Triangle> triangles, std::span<const Vertex> forbidden_flat = {});

  [[nodiscard]] bool has(const Triangle& t) const;
  [[nodiscard]] bool has_a(Vertex v) const { return has({v, TriangleKind::A}); }
  [[nodiscard]] bool has_b(Vertex v) const { return has({v, TriangleKind::B}); }
  [[nodiscard]] bool contains(Vertex v) const;
  /// All six triangles around v belong to the region.
  [[nodiscard]] bool interior(Vertex v) const;
  [[nodiscard]] bool flat_forbidden(Vertex anchor) const;

  [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Vertex>& interior_vertices() const { return interior_; }
  [[nodiscard]] std::vector<Vertex> boundary_vertices() const;
  [[nodiscard]] std::vector<Triangle> triangles() const;
  [[nodiscard]] std::size_t triangle_count() const { return n_a_ + n_b_; }
  [[nodiscard]] std::size_t a_count() const { return n_a_; }
  [[nodiscard]] std::size_t b_count() const { return n_b_; }
  /// Boundary traversed with the region on the left; one cycle per component
  /// of the boundary.
  [[nodiscard]] std::vector<std::vector<Vertex>> boundary_cycles() const;

  // Dense indexing over the bounding box of the vertices.
  [[nodiscard]] int umin() const { return umin_; }
  [[nodiscard]] int vmin() const { return vmin_; }
  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }
  [[nodiscard]] bool in_box(Vertex p) const {
    return p.u >= umin_ && p.v >= vmin_ && p.u < umin_ + width_ && p.v < vmin_ + height_;
  }
  [[nodiscard]] std::size_t index(Vertex p) const {
    return static_cast<std::size_t>(p.v - vmin_) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(p.u - umin_);
  }
  [[nodiscard]] std::size_t box_size() const {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

 private:
  enum : std::uint8_t { kA = 1, kB = 2, kVertex = 4, kInterior = 8, kForbid = 16 };
  [[nodiscard]] std::uint8_t flags(Vertex p) const { return in_box(p) ? cell_[index(p)] : 0; }

  int umin_ = 0, vmin_ = 0, width_ = 0, height_ = 0;
  std::vector<std::uint8_t> cell_;
  std::vector<Vertex> vertices_;
  std::vector<Vertex> interior_;
  std::size_t n_a_ = 0, n_b_ = 0;
};

/// Integer heights on the vertices of a region.
class HeightFunction {
 public:
  HeightFunction() = default;
  explicit HeightFunction(std::shared_ptr<const Region> region, int fill = 0);

  [[nodiscard]] const Region& region() const { return *region_; }
  [[nodiscard]] const std::shared_ptr<const Region>& region_ptr() const { return region_; }
  [[nodiscard]] int at(Vertex p) const { return h_[region_->index(p)]; }
  void set(Vertex p, int value) { h_[region_->index(p)] = value; }
  /// Raw storage over the region's bounding box (entries off the region are
  /// unspecified).
  [[nodiscard]] std::span<const int> raw() const { return h_; }

  /// Throws InvalidHeight naming the first offending edge.
  void validate() const;
  [[nodiscard]] bool valid() const;

  /// Equality of values on region vertices.
  friend bool operator==(const HeightFunction& a, const HeightFunction& b);

 private:
  std::shared_ptr<const Region> region_;
  std::vector<int> h_;
};

struct Lozenge {
  int type = 3;    // 1, 2 or 3
  Vertex anchor;   // anchor of its A triangle
  [[nodiscard]] double x() const { return anchor.u + (type == 2 ? 1.0 : 0.5); }
  [[nodiscard]] double y() const { return anchor.v + (type == 1 ? 0.0 : 0.5); }
  friend bool operator==(const Lozenge&, const Lozenge&) = default;
  friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

using Tiling = std::vector<Lozenge>;

struct TypeCounts {
  long long type1 = 0, type2 = 0, type3 = 0;
  friend bool operator==(const TypeCounts&, const TypeCounts&) = default;
};

/// Lozenges sorted by (type, anchor). Throws InvalidHeight when h is not the
/// height function of a tiling of its region.
Tiling heights_to_tiling(const HeightFunction& h);
/// Inverse of heights_to_tiling, normalized so the lexicographically smallest
/// vertex has height `base`.
HeightFunction tiling_to_heights(const Tiling& tiling, std::shared_ptr<const Region> region, int base = 0);
TypeCounts type_counts(const HeightFunction& h);
TypeCounts type_counts(const Tiling& t);

/// Direction in which vertex p can flip (+1 or -1), or 0 if it cannot.
/// Boundary vertices never flip.
int flip_direction(const HeightFunction& h, Vertex p);
/// Flip if possible; returns the applied direction (0 leaves h unchanged).
int flip(HeightFunction& h, Vertex p);
bool can_flip(const HeightFunction& h, Vertex p, int dir);

struct PartialHeight {
  Vertex at;
  int value = 0;
};

/// Raised by extension when the prescribed values are not compatible.
class ExtensionError : public std::runtime_error {
 public:
  ExtensionError(const std::string& what, Vertex from, Vertex to)
      : std::runtime_error(what), from_(from), to_(to) {}
  [[nodiscard]] Vertex from() const { return from_; }
  [[nodiscard]] Vertex to() const { return to_; }

 private:
  Vertex from_, to_;
};

/// Largest height function on the region agreeing with the prescribed values:
/// h(y) = min over prescribed x of g(x) + d(x, y), d the largest rise the edge
/// rule allows along paths inside the region.
HeightFunction extend_upper(std::span<const PartialHeight> partial, std::shared_ptr<const Region> region);
/// Smallest such height function.
HeightFunction extend_lower(std::span<const PartialHeight> partial, std::shared_ptr<const Region> region);

/// Boundary values of h, in the order of region.boundary_cycles().
std::vector<PartialHeight> boundary_values(const HeightFunction& h);
/// True when the boundary data extends to a height function that is a tiling.
bool realizable(std::span<const PartialHeight> boundary, std::shared_ptr<const Region> region);

}  // namespace skewtab
