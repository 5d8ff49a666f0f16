#include "latgeo/polytope.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace latgeo {

namespace {

// All size-k index subsets of {0..n-1}, lexicographic.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct FacetList {
  std::vector<LinearForm> forms;                  // a . x <= b, primitive, sorted
  std::vector<std::vector<std::size_t>> tights;   // point indices on each facet
};

// Facets of a full-dimensional point set in Z^r by exhaustive hyperplane
// enumeration over size-r subsets.
FacetList full_dim_facets(const std::vector<std::vector<Int>>& pts, std::size_t r) {
  FacetList out;
  if (r == 0) return out;
  std::set<LinearForm> seen;
  for_each_combination(pts.size(), r, [&](const std::vector<std::size_t>& subset) {
    IntMatrix diffs(r - 1, r);
    for (std::size_t i = 1; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        diffs.at(i - 1, j) = pts[subset[i]][j] - pts[subset[0]][j];
    if (rank(diffs) + 1 != r) return;
    IntMatrix kernel = integer_kernel(diffs);
    if (kernel.rows() != 1) return;  // not a hyperplane
    std::vector<Int> normal = kernel.row(0);
    Int offset = dot(normal, pts[subset[0]]);
    bool all_le = true, all_ge = true;
    for (const auto& p : pts) {
      Int v = dot(normal, p);
      if (v > offset) all_le = false;
      if (v < offset) all_ge = false;
      if (!all_le && !all_ge) return;
    }
    LinearForm form;
    if (all_le) {
      form.a = normal;
      form.b = offset;
    } else {
      form.a = normal;
      for (Int& x : form.a) x = -x;
      form.b = -offset;
    }
    seen.insert(std::move(form));
  });
  for (const LinearForm& f : seen) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(f.a, pts[i]) == f.b) tight.push_back(i);
    out.forms.push_back(f);
    out.tights.push_back(std::move(tight));
  }
  return out;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
  std::vector<Rat> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace

LatticePolytope LatticePolytope::make(std::vector<LatticePoint> points) {
  if (points.empty()) throw input_error("polytope needs at least one point");
  const std::size_t ambient = points.front().size();
  if (ambient == 0) throw input_error("ambient dimension must be at least 1");
  for (const auto& p : points)
    if (p.size() != ambient) throw input_error("mixed ambient dimensions");

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolytope poly;
  poly.ambient_dim_ = ambient;
  poly.chart_origin_ = points.front();

  IntMatrix diffs(points.size() - 1, ambient);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j)
      diffs.at(i - 1, j) = points[i][j] - points.front()[j];
  poly.chart_basis_ = saturate_rows(diffs);
  const std::size_t r = poly.chart_basis_.rows();
  poly.dim_ = r;

  IntMatrix bt = poly.chart_basis_.transposed();
  std::vector<std::vector<Int>> chart_pts;
  chart_pts.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Rat> rhs(ambient);
    for (std::size_t j = 0; j < ambient; ++j) rhs[j] = Rat(p[j] - points.front()[j]);
    auto sol = solve_rational(bt, rhs);
    if (sol.status != SolveStatus::solved) throw internal_error("point off its own affine hull");
    std::vector<Int> c(r);
    for (std::size_t i = 0; i < r; ++i) {
      if (!is_integer(sol.x[i])) throw internal_error("chart coordinate not integral");
      c[i] = numerator(sol.x[i]);
    }
    chart_pts.push_back(std::move(c));
  }

  FacetList hull = full_dim_facets(chart_pts, r);

  // A point is a vertex exactly when its tight facet normals span Z^r.
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool vertex;
    if (r == 0) {
      vertex = true;
    } else {
      std::vector<std::vector<Int>> tight_normals;
      for (const LinearForm& f : hull.forms)
        if (dot(f.a, chart_pts[i]) == f.b) tight_normals.push_back(f.a);
      vertex = tight_normals.size() >= r && rank(IntMatrix::from_rows(tight_normals)) == r;
    }
    if (vertex) {
      poly.vertices_.push_back(points[i]);
      poly.chart_vertices_.push_back(chart_pts[i]);
    }
  }
  if (poly.vertices_.empty() || poly.vertices_.front() != points.front())
    throw internal_error("lex-min point must be a vertex");

  poly.chart_facets_ = hull.forms;

  // Ambient facet forms: lift each chart normal through the chart basis.
  for (const LinearForm& f : poly.chart_facets_) {
    auto sol = solve_rational(poly.chart_basis_, to_rat(f.a));
    if (sol.status != SolveStatus::solved) throw internal_error("facet lift failed");
    Int denom_lcm = 1;
    for (const Rat& q : sol.x)
      denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(q));
    std::vector<Int> g(ambient);
    for (std::size_t j = 0; j < ambient; ++j)
      g[j] = numerator(sol.x[j]) * (denom_lcm / denominator(sol.x[j]));
    make_primitive(g);
    Int beta = dot(g, poly.vertices_.front());
    for (const auto& v : poly.vertices_) beta = std::max(beta, dot(g, v));
    poly.hrep_.facets.push_back({std::move(g), std::move(beta)});
  }
  std::sort(poly.hrep_.facets.begin(), poly.hrep_.facets.end());

  // Affine-hull equations from the saturated kernel of the difference lattice.
  IntMatrix vdiffs(poly.vertices_.size() - 1, ambient);
  for (std::size_t i = 1; i < poly.vertices_.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j)
      vdiffs.at(i - 1, j) = poly.vertices_[i][j] - poly.vertices_.front()[j];
  IntMatrix eqs = integer_kernel(vdiffs);
  for (std::size_t i = 0; i < eqs.rows(); ++i) {
    LinearForm e;
    e.a = eqs.row(i);
    e.b = dot(e.a, poly.vertices_.front());
    poly.hrep_.equations.push_back(std::move(e));
  }
  std::sort(poly.hrep_.equations.begin(), poly.hrep_.equations.end());

  return poly;
}

LatticePoint LatticePolytope::chart_to_ambient(const std::vector<Int>& c, const Int& dilation) const {
  if (c.size() != dim_) throw internal_error("chart coordinate length mismatch");
  LatticePoint x(ambient_dim_);
  for (std::size_t j = 0; j < ambient_dim_; ++j) x[j] = dilation * chart_origin_[j];
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) x[j] += c[i] * chart_basis_.at(i, j);
  }
  return x;
}

std::vector<Int> LatticePolytope::ambient_to_chart(const LatticePoint& x) const {
  if (x.size() != ambient_dim_) throw internal_error("ambient coordinate length mismatch");
  std::vector<Rat> rhs(ambient_dim_);
  for (std::size_t j = 0; j < ambient_dim_; ++j) rhs[j] = Rat(x[j] - chart_origin_[j]);
  auto sol = solve_rational(chart_basis_.transposed(), rhs);
  if (sol.status != SolveStatus::solved) throw internal_error("point not on the affine hull");
  std::vector<Int> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!is_integer(sol.x[i])) throw internal_error("point not on the affine lattice");
    c[i] = numerator(sol.x[i]);
  }
  return c;
}

bool LatticePolytope::contains(const LatticePoint& x, const Int& dilation) const {
  if (x.size() != ambient_dim_) return false;
  for (const LinearForm& e : hrep_.equations)
    if (dot(e.a, x) != dilation * e.b) return false;
  for (const LinearForm& f : hrep_.facets)
    if (dot(f.a, x) > dilation * f.b) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Lattice-point enumeration.
//
// The production kernel scans the chart bounding box coordinate by
// coordinate, tightening the admissible interval at every level from the
// facet inequalities and interval bounds on the still-free coordinates.
// At the last level the interval is exact, so points are emitted without a
// membership test. lattice_points_reference keeps the flat scan.
// ---------------------------------------------------------------------------

namespace {

struct ScanSystem {
  std::size_t r = 0;
  std::vector<std::vector<Int>> a;   // inequality normals, F x r
  std::vector<Int> rhs;              // F
  std::vector<Int> lo, hi;           // coordinate ranges of the box
  std::vector<std::vector<Int>> sufmin;  // F x (r+1), min future contribution
};

ScanSystem build_scan(const LatticePolytope& p, const Int& k, bool strict) {
  ScanSystem sys;
  sys.r = p.dim();
  const auto& verts = p.chart_vertices();
  sys.lo.assign(sys.r, 0);
  sys.hi.assign(sys.r, 0);
  for (std::size_t j = 0; j < sys.r; ++j) {
    Int mn = verts.front()[j], mx = verts.front()[j];
    for (const auto& v : verts) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    sys.lo[j] = k * mn;
    sys.hi[j] = k * mx;
  }
  for (const LinearForm& f : p.chart_facets()) {
    sys.a.push_back(f.a);
    sys.rhs.push_back(k * f.b - (strict ? 1 : 0));
  }
  sys.sufmin.assign(sys.a.size(), std::vector<Int>(sys.r + 1));
  for (std::size_t i = 0; i < sys.a.size(); ++i) {
    sys.sufmin[i][sys.r] = 0;
    for (std::size_t j = sys.r; j > 0; --j) {
      const Int& c = sys.a[i][j - 1];
      Int contrib = std::min(c * sys.lo[j - 1], c * sys.hi[j - 1]);
      sys.sufmin[i][j - 1] = sys.sufmin[i][j] + contrib;
    }
  }
  return sys;
}

// Admissible interval for coordinate `level` given fixed partial sums.
// Returns false when empty (including an unsatisfiable zero-coefficient row).
bool tighten(const ScanSystem& sys, std::size_t level, const std::vector<Int>& partial,
             Int& lo, Int& hi) {
  lo = sys.lo[level];
  hi = sys.hi[level];
  for (std::size_t i = 0; i < sys.a.size(); ++i) {
    const Int& c = sys.a[i][level];
    Int budget = sys.rhs[i] - partial[i] - sys.sufmin[i][level + 1];
    if (c > 0) {
      hi = std::min(hi, floor_div(budget, c));
    } else if (c < 0) {
      lo = std::max(lo, -floor_div(budget, -c));
    } else if (budget < 0) {
      return false;
    }
    if (lo > hi) return false;
  }
  return true;
}

template <typename Emit>
void scan_recurse(const ScanSystem& sys, std::size_t level, std::vector<Int>& prefix,
                  std::vector<Int>& partial, Emit&& emit) {
  Int lo, hi;
  if (!tighten(sys, level, partial, lo, hi)) return;
  if (level + 1 == sys.r) {
    emit(prefix, lo, hi);
    return;
  }
  const std::size_t f = sys.a.size();
  std::vector<Int> saved = partial;
  prefix.push_back(lo);
  for (std::size_t i = 0; i < f; ++i) partial[i] += sys.a[i][level] * lo;
  for (Int x = lo; x <= hi; ++x) {
    prefix.back() = x;
    scan_recurse(sys, level + 1, prefix, partial, emit);
    for (std::size_t i = 0; i < f; ++i) partial[i] += sys.a[i][level];
  }
  prefix.pop_back();
  partial = std::move(saved);
}

// Runs the scan, parallelized over the leading coordinate; emits chart
// coordinate vectors in deterministic (lexicographic) order.
template <typename Consume>
void run_scan(const ScanSystem& sys, Consume&& consume) {
  const std::size_t f = sys.a.size();
  if (sys.r == 1) {
    std::vector<Int> prefix, partial(f, 0);
    scan_recurse(sys, 0, prefix, partial, consume);
    return;
  }
  std::vector<Int> partial0(f, 0);
  Int lo0, hi0;
  if (!tighten(sys, 0, partial0, lo0, hi0)) return;
  const long long width = static_cast<long long>(to_int64(hi0 - lo0 + 1));
  std::vector<std::vector<std::pair<std::vector<Int>, std::pair<Int, Int>>>> buckets(width);
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < width; ++idx) {
    Int x0 = lo0 + idx;
    std::vector<Int> prefix{x0};
    std::vector<Int> partial(f);
    for (std::size_t i = 0; i < f; ++i) partial[i] = sys.a[i][0] * x0;
    auto& bucket = buckets[idx];
    scan_recurse(sys, 1, prefix, partial,
                 [&bucket](const std::vector<Int>& pre, const Int& lo, const Int& hi) {
                   bucket.emplace_back(pre, std::make_pair(lo, hi));
                 });
  }
  for (auto& bucket : buckets)
    for (auto& [pre, range] : bucket) consume(pre, range.first, range.second);
}

std::vector<LatticePoint> finalize_ambient(const LatticePolytope& p, const Int& k,
                                           std::vector<std::vector<Int>>& chart_points) {
  std::vector<LatticePoint> out;
  out.reserve(chart_points.size());
  for (const auto& c : chart_points) out.push_back(p.chart_to_ambient(c, k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticePoint> scan_points(const LatticePolytope& p, unsigned dilation, bool strict,
                                      bool parallel) {
  const Int k = dilation;
  if (p.dim() == 0 || dilation == 0) {
    if (strict && dilation == 0) throw input_error("interior requires dilation >= 1");
    if (dilation == 0) return {LatticePoint(p.ambient_dim(), Int(0))};
    return {p.chart_to_ambient({}, k)};
  }
  ScanSystem sys = build_scan(p, k, strict);
  std::vector<std::vector<Int>> chart_points;
  auto consume = [&chart_points](const std::vector<Int>& pre, const Int& lo, const Int& hi) {
    for (Int x = lo; x <= hi; ++x) {
      std::vector<Int> c = pre;
      c.push_back(x);
      chart_points.push_back(std::move(c));
    }
  };
  if (parallel) {
    run_scan(sys, consume);
  } else {
    std::vector<Int> prefix, partial(sys.a.size(), 0);
    scan_recurse(sys, 0, prefix, partial, consume);
  }
  return finalize_ambient(p, k, chart_points);
}

}  // namespace

std::vector<LatticePoint> lattice_points(const LatticePolytope& p, unsigned dilation) {
  return scan_points(p, dilation, false, true);
}

std::vector<LatticePoint> lattice_points_serial(const LatticePolytope& p, unsigned dilation) {
  return scan_points(p, dilation, false, false);
}

std::vector<LatticePoint> interior_lattice_points(const LatticePolytope& p, unsigned dilation) {
  if (dilation == 0) throw input_error("interior requires dilation >= 1");
  return scan_points(p, dilation, true, true);
}

Int lattice_point_count(const LatticePolytope& p, unsigned dilation) {
  if (p.dim() == 0 || dilation == 0) return 1;
  ScanSystem sys = build_scan(p, dilation, false);
  Int count = 0;
  run_scan(sys, [&count](const std::vector<Int>&, const Int& lo, const Int& hi) {
    count += hi - lo + 1;
  });
  return count;
}

Int interior_lattice_point_count(const LatticePolytope& p, unsigned dilation) {
  if (dilation == 0) throw input_error("interior requires dilation >= 1");
  if (p.dim() == 0) return 1;
  ScanSystem sys = build_scan(p, dilation, true);
  Int count = 0;
  run_scan(sys, [&count](const std::vector<Int>&, const Int& lo, const Int& hi) {
    count += hi - lo + 1;
  });
  return count;
}

std::vector<LatticePoint> lattice_points_reference(const LatticePolytope& p, unsigned dilation) {
  const Int k = dilation;
  if (p.dim() == 0 || dilation == 0) {
    if (dilation == 0) return {LatticePoint(p.ambient_dim(), Int(0))};
    return {p.chart_to_ambient({}, k)};
  }
  ScanSystem sys = build_scan(p, k, false);
  std::vector<std::vector<Int>> chart_points;
  std::vector<Int> x = sys.lo;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < sys.a.size() && inside; ++i)
      inside = dot(sys.a[i], x) <= sys.rhs[i];
    if (inside) chart_points.push_back(x);
    std::size_t j = sys.r;
    while (j > 0) {
      --j;
      if (x[j] < sys.hi[j]) {
        ++x[j];
        break;
      }
      x[j] = sys.lo[j];
      if (j == 0) return finalize_ambient(p, k, chart_points);
    }
    if (sys.r == 0) break;
  }
  return finalize_ambient(p, k, chart_points);
}

// ---------------------------------------------------------------------------
// Triangulation.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> triangulate_rec(const std::vector<std::vector<Int>>& pts,
                                                      std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (pts.size() == r + 1) {
    std::vector<std::size_t> all(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) all[i] = i;
    out.push_back(std::move(all));
    return out;
  }
  FacetList facets = full_dim_facets(pts, r);
  for (std::size_t fi = 0; fi < facets.forms.size(); ++fi) {
    const auto& tight = facets.tights[fi];
    if (std::find(tight.begin(), tight.end(), std::size_t{0}) != tight.end()) continue;
    // Project the facet onto independent coordinates to recurse full-dim.
    IntMatrix diffs(tight.size() - 1, r);
    for (std::size_t i = 1; i < tight.size(); ++i)
      for (std::size_t j = 0; j < r; ++j)
        diffs.at(i - 1, j) = pts[tight[i]][j] - pts[tight[0]][j];
    std::vector<std::size_t> keep = pivot_columns(diffs);
    std::vector<std::vector<Int>> sub;
    sub.reserve(tight.size());
    for (std::size_t i : tight) {
      std::vector<Int> q(keep.size());
      for (std::size_t j = 0; j < keep.size(); ++j) q[j] = pts[i][keep[j]];
      sub.push_back(std::move(q));
    }
    for (auto& simplex : triangulate_rec(sub, r - 1)) {
      std::vector<std::size_t> mapped{0};
      for (std::size_t i : simplex) mapped.push_back(tight[i]);
      std::sort(mapped.begin(), mapped.end());
      out.push_back(std::move(mapped));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> fan_triangulation(const LatticePolytope& p) {
  return triangulate_rec(p.chart_vertices(), p.dim());
}

Int normalized_volume_by_triangulation(const LatticePolytope& p) {
  const std::size_t r = p.dim();
  Int total = 0;
  for (const auto& simplex : fan_triangulation(p)) {
    IntMatrix diffs(r, r);
    for (std::size_t i = 1; i < simplex.size(); ++i)
      for (std::size_t j = 0; j < r; ++j)
        diffs.at(i - 1, j) =
            p.chart_vertices()[simplex[i]][j] - p.chart_vertices()[simplex[0]][j];
    total += abs_int(determinant(diffs));
  }
  return total;
}

}  // namespace latgeo
