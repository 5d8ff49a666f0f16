#pragma once

#include "latgeo/matrix.hpp"
#include "latgeo/numbers.hpp"

#include <cstddef>
#include <vector>

namespace latgeo {

/// A point of the ambient lattice, one coordinate per ambient dimension.
using LatticePoint = std::vector<Int>;

/// A primitive integer form: a . x  (<= | ==)  b depending on context.
struct LinearForm {
  std::vector<Int> a;
  Int b;
  bool operator==(const LinearForm&) const = default;
  bool operator<(const LinearForm& o) const { return a != o.a ? a < o.a : b < o.b; }
};

/// Facet inequalities (a . x <= b) plus affine-hull equations (a . x == b),
/// all in ambient coordinates, primitive, deterministically ordered.
struct HRepresentation {
  std::vector<LinearForm> facets;
  std::vector<LinearForm> equations;
};

/// Lattice polytope given by its vertex set. Construction canonicalizes:
/// duplicates and non-extreme points are dropped, vertices are sorted
/// lexicographically, and all derived data (dimension, affine chart,
/// facet description) is computed eagerly so instances are immutable and
/// freely shareable across threads.
///
/// Lower-dimensional polytopes are first-class: internally every instance
/// carries a chart onto Z^dim whose image is aff(P) intersected with the
/// ambient lattice, and all enumeration happens in those coordinates.
class LatticePolytope {
 public:
  /// Canonicalizing constructor; rejects empty input and ragged coordinates.
  static LatticePolytope make(std::vector<LatticePoint> points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  bool is_simplex() const { return vertices_.size() == dim_ + 1; }

  const HRepresentation& hrep() const { return hrep_; }

  /// Vertices in chart coordinates (full-dimensional in Z^dim).
  const std::vector<std::vector<Int>>& chart_vertices() const { return chart_vertices_; }
  /// Facets in chart coordinates: a . c <= b describing P itself (dilation 1).
  const std::vector<LinearForm>& chart_facets() const { return chart_facets_; }
  const LatticePoint& chart_origin() const { return chart_origin_; }
  const IntMatrix& chart_basis() const { return chart_basis_; }

  /// Chart coordinates c of a point of k * aff(P) back to ambient:
  /// x = k * origin + c^T * basis.
  LatticePoint chart_to_ambient(const std::vector<Int>& c, const Int& dilation) const;
  /// Inverse map for points on aff(P); throws internal_error off the hull.
  std::vector<Int> ambient_to_chart(const LatticePoint& x) const;

  /// Membership of x in the dilate k * P, ambient coordinates.
  bool contains(const LatticePoint& x, const Int& dilation) const;

  /// Default-constructed instances are empty placeholders; every usable
  /// polytope comes from make().
  LatticePolytope() = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<LatticePoint> vertices_;
  LatticePoint chart_origin_;
  IntMatrix chart_basis_;  // dim x ambient, saturated HNF rows
  std::vector<std::vector<Int>> chart_vertices_;
  std::vector<LinearForm> chart_facets_;
  HRepresentation hrep_;
};

/// All lattice points of k * P, ambient coordinates, lexicographically sorted.
/// Pruned recursive scan over the chart bounding box; OpenMP-parallel over the
/// leading coordinate.
std::vector<LatticePoint> lattice_points(const LatticePolytope& p, unsigned dilation);
std::vector<LatticePoint> lattice_points_serial(const LatticePolytope& p, unsigned dilation);

/// Count without materializing points.
Int lattice_point_count(const LatticePolytope& p, unsigned dilation);

/// Reference kernel kept for testing and benchmarking: flat bounding-box scan
/// with a membership test per box point. Exponential in the box size; use on
/// small instances only.
std::vector<LatticePoint> lattice_points_reference(const LatticePolytope& p, unsigned dilation);

/// Lattice points in the relative interior of k * P (strict on every facet).
std::vector<LatticePoint> interior_lattice_points(const LatticePolytope& p, unsigned dilation);
Int interior_lattice_point_count(const LatticePolytope& p, unsigned dilation);

/// Triangulation of P into simplices spanned by vertices of P, as lists of
/// vertex indices. Deterministic (recursive cone over the first vertex).
std::vector<std::vector<std::size_t>> fan_triangulation(const LatticePolytope& p);

/// Normalized volume as the sum of simplex determinants over fan_triangulation.
Int normalized_volume_by_triangulation(const LatticePolytope& p);

}  // namespace latgeo
