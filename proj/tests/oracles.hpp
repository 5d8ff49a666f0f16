#pragma once

// Test-only oracles, independent of the library's production paths:
// cofactor determinants, flat parallelepiped scans, and small helpers shared
// by the suites. Anything here must stay naive enough to audit by eye.

#include "latgeo/boxpoints.hpp"
#include "latgeo/matrix.hpp"
#include "latgeo/polytope.hpp"

#include <algorithm>
#include <vector>

namespace latgeo::testing {

// Determinant by cofactor expansion along the first row.
inline Int cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Int term = m.at(0, j) * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// Brute-force enumeration of the lattice points of the half-open
// parallelepiped: walk the bounding box of {V t : t in [0,1)^{n+1}} and keep
// integer points whose barycentric coordinates all lie in [0,1). The walk
// prunes a coordinate prefix once the adjugate bands can no longer be met,
// which skips empty sub-boxes without changing the visited set.
struct BruteBoxPoint {
  std::vector<Int> embedded;
  std::vector<Rat> lambdas;
};

inline std::vector<BruteBoxPoint> box_points_bruteforce(const IntMatrix& vmat) {
  const std::size_t m = vmat.rows();
  Int det = cofactor_determinant(vmat);
  if (det == 0) throw internal_error("oracle needs a nonsingular matrix");

  // adj(V) * x = det * lambda; lambda_i in [0,1) becomes a band on integers.
  IntMatrix adj(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      IntMatrix minor(m - 1, m - 1);
      std::size_t rr = 0;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == j) continue;
        std::size_t cc = 0;
        for (std::size_t c = 0; c < m; ++c) {
          if (c == i) continue;
          minor.at(rr, cc++) = vmat.at(r, c);
        }
        ++rr;
      }
      Int cof = cofactor_determinant(minor);
      adj.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  const int sign = det > 0 ? 1 : -1;
  const Int absdet = abs_int(det);

  // Bounding box of the parallelepiped, coordinatewise.
  std::vector<Int> lo(m, 0), hi(m, 0);
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t col = 0; col < m; ++col) {
      const Int& e = vmat.at(row, col);
      if (e < 0)
        lo[row] += e;
      else
        hi[row] += e;
    }

  // Suffix interval bounds of the band values over the remaining box.
  std::vector<std::vector<Int>> sufmin(m, std::vector<Int>(m + 1, Int(0)));
  std::vector<std::vector<Int>> sufmax(m, std::vector<Int>(m + 1, Int(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = m; j > 0; --j) {
      Int c = sign * adj.at(i, j - 1);
      sufmin[i][j - 1] = sufmin[i][j] + std::min(c * lo[j - 1], c * hi[j - 1]);
      sufmax[i][j - 1] = sufmax[i][j] + std::max(c * lo[j - 1], c * hi[j - 1]);
    }

  std::vector<BruteBoxPoint> out;
  std::vector<Int> x(m), band(m, Int(0));
  auto rec = [&](auto&& self, std::size_t level) -> void {
    for (std::size_t i = 0; i < m; ++i) {
      if (band[i] + sufmax[i][level] < 0) return;
      if (band[i] + sufmin[i][level] > absdet - 1) return;
    }
    if (level == m) {
      BruteBoxPoint bp;
      bp.embedded = x;
      bp.lambdas.resize(m);
      for (std::size_t i = 0; i < m; ++i) bp.lambdas[i] = Rat(band[i], absdet);
      out.push_back(std::move(bp));
      return;
    }
    for (Int v = lo[level]; v <= hi[level]; ++v) {
      x[level] = v;
      for (std::size_t i = 0; i < m; ++i) band[i] += sign * adj.at(i, level) * v;
      self(self, level + 1);
      for (std::size_t i = 0; i < m; ++i) band[i] -= sign * adj.at(i, level) * v;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const BruteBoxPoint& a, const BruteBoxPoint& b) { return a.embedded < b.embedded; });
  return out;
}

}  // namespace latgeo::testing
