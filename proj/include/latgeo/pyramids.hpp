#pragma once

#include "latgeo/boxpoints.hpp"
#include "latgeo/polytope.hpp"

#include <cstddef>
#include <vector>

namespace latgeo {

/// Result of stripping apexes until none remains. Reconstructing over the
/// base with one pyramid construction per apex gives a polytope with the
/// same h* as the input; the base admits no further apex.
struct PyramidDecomposition {
  LatticePolytope base;
  std::vector<LatticePoint> apexes;  // in stripping order
  std::size_t fold_count() const { return apexes.size(); }
};

/// l-fold iterated conv(0, B x {1}); l = 0 returns b unchanged.
LatticePolytope standard_pyramid(const LatticePolytope& b, unsigned folds);

/// Box-point criterion: vertex i is an apex iff i is outside the support of
/// the simplex.
bool is_apex_simplex(const EmbeddedSimplex& s, std::size_t i);

/// General criterion: removing v drops the dimension by one and v sits at
/// lattice distance 1 over the affine hull of the rest, measured in the
/// intrinsic lattice of aff(P).
bool is_apex_general(const LatticePolytope& p, const LatticePoint& v);

/// Strips the first apex in canonical vertex order until none remains.
PyramidDecomposition decompose(const LatticePolytope& p);

}  // namespace latgeo
