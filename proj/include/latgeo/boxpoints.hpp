#pragma once

#include "latgeo/ehrhart.hpp"
#include "latgeo/matrix.hpp"
#include "latgeo/polytope.hpp"

#include <cstddef>
#include <vector>

namespace latgeo {

/// A lattice simplex embedded at height 1: column i of `vmat` is the chart
/// coordinate vector of vertex i with a trailing 1. The absolute determinant
/// is the normalized volume.
struct EmbeddedSimplex {
  LatticePolytope poly;
  IntMatrix vmat;  // (dim+1) x (dim+1)
  Int det;

  std::size_t n() const { return poly.dim(); }
  Int volume() const { return abs_int(det); }

  /// Throws input_error unless p is a simplex.
  static EmbeddedSimplex from(const LatticePolytope& p);
};

/// A lattice point of the half-open parallelepiped spanned by the embedded
/// vertex vectors. `embedded` identifies the point (last coordinate = height);
/// `ambient` is the same barycentric combination evaluated on the original
/// vertices, a point of height * P.
struct BoxPoint {
  std::vector<Int> embedded;           // length n+1
  LatticePoint ambient;
  std::vector<Rat> lambdas;            // length n+1, each in [0,1)
  unsigned height = 0;                 // = sum of lambdas = last embedded coord
  std::vector<std::size_t> support;    // {i : lambda_i != 0}
};

/// All volume-many box points (the origin included), sorted by
/// (height, embedded coordinates). Walks the quotient group
/// Z^{n+1} / <vertex columns> obtained from the Smith normal form, so the
/// runtime is proportional to the volume rather than to any bounding box.
/// OpenMP-parallel over group elements.
std::vector<BoxPoint> enumerate_box_points(const EmbeddedSimplex& s);
std::vector<BoxPoint> enumerate_box_points_serial(const EmbeddedSimplex& s);

/// h*_i = number of box points of height i.
HStarPolynomial hstar_from_box(const EmbeddedSimplex& s);

/// Union of the supports of all box points.
std::vector<std::size_t> simplex_support(const EmbeddedSimplex& s);

}  // namespace latgeo
