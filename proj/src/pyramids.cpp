#include "latgeo/pyramids.hpp"

#include <algorithm>

namespace latgeo {

LatticePolytope standard_pyramid(const LatticePolytope& b, unsigned folds) {
  LatticePolytope p = b;
  for (unsigned l = 0; l < folds; ++l) {
    std::vector<LatticePoint> points;
    points.push_back(LatticePoint(p.ambient_dim() + 1, Int(0)));
    for (const auto& v : p.vertices()) {
      LatticePoint lifted = v;
      lifted.push_back(1);
      points.push_back(std::move(lifted));
    }
    p = LatticePolytope::make(std::move(points));
  }
  return p;
}

bool is_apex_simplex(const EmbeddedSimplex& s, std::size_t i) {
  if (i > s.n()) throw input_error("vertex index out of range");
  auto supp = simplex_support(s);
  return !std::binary_search(supp.begin(), supp.end(), i);
}

bool is_apex_general(const LatticePolytope& p, const LatticePoint& v) {
  if (p.dim() < 1) throw input_error("apex test requires dim >= 1");
  std::size_t vi = p.vertex_count();
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    if (p.vertices()[i] == v) vi = i;
  if (vi == p.vertex_count()) throw input_error("apex candidate is not a vertex");

  const std::size_t r = p.dim();
  std::vector<std::vector<Int>> rest;
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    if (i != vi) rest.push_back(p.chart_vertices()[i]);

  IntMatrix diffs(rest.size() - 1, r);
  for (std::size_t i = 1; i < rest.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) diffs.at(i - 1, j) = rest[i][j] - rest[0][j];
  if (rank(diffs) + 1 != r) return false;  // dimension does not drop by one

  // Primitive form on the intrinsic lattice vanishing on aff(rest).
  IntMatrix kernel = integer_kernel(diffs);
  if (kernel.rows() != 1) throw internal_error("hyperplane kernel is not one-dimensional");
  std::vector<Int> normal = kernel.row(0);
  Int dist = dot(normal, p.chart_vertices()[vi]) - dot(normal, rest[0]);
  return abs_int(dist) == 1;
}

PyramidDecomposition decompose(const LatticePolytope& p) {
  PyramidDecomposition result;
  LatticePolytope current = p;
  while (current.dim() >= 1) {
    bool stripped = false;
    for (const auto& v : current.vertices()) {
      if (!is_apex_general(current, v)) continue;
      std::vector<LatticePoint> rest;
      for (const auto& w : current.vertices())
        if (w != v) rest.push_back(w);
      result.apexes.push_back(v);
      current = LatticePolytope::make(std::move(rest));
      stripped = true;
      break;
    }
    if (!stripped) break;
  }
  result.base = std::move(current);
  return result;
}

}  // namespace latgeo
