#include "latgeo/generators.hpp"

#include "latgeo/matrix.hpp"

namespace latgeo {

LatticePolytope paper_example(unsigned d) {
  if (d < 2) throw input_error("the example family is defined for d >= 2");
  const std::size_t n = 2 * d - 1;
  std::vector<LatticePoint> points;
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint v(n + 1, Int(0));
    v[i] = 1;
    v[n] = -1;
    points.push_back(std::move(v));
  }
  LatticePoint last(n + 1, Int(1));
  last[n] = Int(3) - Int(2) * d;
  points.push_back(std::move(last));
  return LatticePolytope::make(std::move(points));
}

LatticePolytope standard_simplex(unsigned n) {
  if (n == 0) return LatticePolytope::make({LatticePoint{Int(0)}});
  std::vector<LatticePoint> points;
  points.push_back(LatticePoint(n, Int(0)));
  for (unsigned i = 0; i < n; ++i) {
    LatticePoint v(n, Int(0));
    v[i] = 1;
    points.push_back(std::move(v));
  }
  return LatticePolytope::make(std::move(points));
}

namespace {

LatticePoint sample_point(SplitMix64& rng, unsigned dim, unsigned bound) {
  LatticePoint p(dim);
  for (unsigned j = 0; j < dim; ++j) p[j] = Int(rng.coordinate(bound));
  return p;
}

bool affinely_independent(const std::vector<LatticePoint>& pts) {
  IntMatrix diffs(pts.size() - 1, pts.front().size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.front().size(); ++j)
      diffs.at(i - 1, j) = pts[i][j] - pts[0][j];
  return rank(diffs) + 1 == pts.size();
}

}  // namespace

std::vector<LatticePolytope> random_corpus(const CorpusSpec& spec) {
  if (spec.dim_min < 1 || spec.dim_min > spec.dim_max)
    throw input_error("corpus dimension range is empty");
  SplitMix64 rng(spec.seed);
  std::vector<LatticePolytope> out;
  out.reserve(spec.count);
  for (unsigned i = 0; i < spec.count; ++i) {
    unsigned dim =
        spec.dim_min + static_cast<unsigned>(rng.below(spec.dim_max - spec.dim_min + 1ULL));
    if (spec.shape == CorpusShape::simplex) {
      std::vector<LatticePoint> pts;
      do {
        pts.clear();
        for (unsigned v = 0; v <= dim; ++v) pts.push_back(sample_point(rng, dim, spec.bound));
      } while (!affinely_independent(pts));
      out.push_back(LatticePolytope::make(std::move(pts)));
    } else {
      unsigned m = dim + 2 + static_cast<unsigned>(rng.below(4));
      std::vector<LatticePoint> pts;
      for (unsigned v = 0; v < m; ++v) pts.push_back(sample_point(rng, dim, spec.bound));
      out.push_back(LatticePolytope::make(std::move(pts)));
    }
  }
  return out;
}

}  // namespace latgeo
