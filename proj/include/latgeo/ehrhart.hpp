#pragma once

#include "latgeo/numbers.hpp"
#include "latgeo/polytope.hpp"

#include <vector>

namespace latgeo {

/// Numerator coefficients of the Ehrhart series, h*_0 .. h*_n with
/// n = dim(P). Always non-negative with h*_0 = 1; the coefficient sum is
/// the normalized volume.
class HStarPolynomial {
 public:
  explicit HStarPolynomial(std::vector<Int> coeffs);

  const std::vector<Int>& coeffs() const { return c_; }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const { return c_.size(); }

  /// Largest index with a nonzero coefficient; 0 for h* = 1.
  unsigned degree() const;
  /// Normalized volume.
  Int sum() const;
  /// Coefficients zero-padded to the given length (>= size()).
  std::vector<Int> padded(std::size_t length) const;

  bool operator==(const HStarPolynomial&) const = default;

 private:
  std::vector<Int> c_;
};

/// h* by counting lattice points of the dilates k = 0..n and applying the
/// binomial inversion of the Ehrhart series identity. Works for arbitrary
/// lattice polytopes; counts run in the intrinsic lattice of aff(P).
HStarPolynomial hstar_via_interpolation(const LatticePolytope& p);

/// codeg(P) = dim(P) + 1 - deg(P), with the degree read off the
/// interpolation path.
unsigned codegree(const LatticePolytope& p);

/// Smallest k >= 1 such that k * P has relative-interior lattice points.
/// Independent of the h* route; always terminates by k = dim(P) + 1.
unsigned codegree_by_interior(const LatticePolytope& p);

}  // namespace latgeo
