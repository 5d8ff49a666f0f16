#include "latgeo/boxpoints.hpp"

#include <algorithm>

namespace latgeo {

EmbeddedSimplex EmbeddedSimplex::from(const LatticePolytope& p) {
  if (!p.is_simplex()) throw input_error("box points are defined for simplices only");
  const std::size_t n = p.dim();
  EmbeddedSimplex s;
  s.poly = p;
  s.vmat = IntMatrix(n + 1, n + 1);
  for (std::size_t col = 0; col <= n; ++col) {
    for (std::size_t row = 0; row < n; ++row) s.vmat.at(row, col) = p.chart_vertices()[col][row];
    s.vmat.at(n, col) = 1;
  }
  s.det = determinant(s.vmat);
  if (s.det == 0) throw input_error("degenerate simplex");
  return s;
}

namespace {

std::vector<BoxPoint> enumerate_impl(const EmbeddedSimplex& s, bool parallel) {
  const std::size_t m = s.n() + 1;
  SnfResult snf = smith_normal_form(s.vmat);
  if (snf.diagonal.size() != m) throw internal_error("embedded simplex matrix is singular");
  IntMatrix uinv = inverse_unimodular(snf.u);
  auto vinv = rational_inverse(s.vmat);

  // lambda(g) = vinv * uinv * g for a digit vector g of the quotient group.
  std::vector<std::vector<Rat>> w(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (vinv[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) w[i][j] += vinv[i][k] * Rat(uinv.at(k, j));
    }

  const long long volume = to_int64(abs_int(s.det));
  std::vector<BoxPoint> out(volume);

  auto fill = [&](long long t) {
    std::vector<Int> digits(m);
    long long rest = t;
    for (std::size_t i = 0; i < m; ++i) {
      long long d = to_int64(snf.diagonal[i]);
      digits[i] = rest % d;
      rest /= d;
    }
    BoxPoint bp;
    bp.lambdas.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
      Rat lam(0);
      for (std::size_t j = 0; j < m; ++j)
        if (digits[j] != 0) lam += w[i][j] * Rat(digits[j]);
      bp.lambdas[i] = frac_part(lam);
      if (bp.lambdas[i] != 0) bp.support.push_back(i);
    }
    bp.embedded.assign(m, Int(0));
    for (std::size_t row = 0; row < m; ++row) {
      Rat acc(0);
      for (std::size_t col = 0; col < m; ++col)
        if (bp.lambdas[col] != 0) acc += Rat(s.vmat.at(row, col)) * bp.lambdas[col];
      if (!is_integer(acc)) throw internal_error("box point is not a lattice point");
      bp.embedded[row] = numerator(acc);
    }
    Int h = bp.embedded.back();
    if (h < 0 || h > Int(s.n())) throw internal_error("box point height out of range");
    bp.height = static_cast<unsigned>(to_int64(h));
    std::vector<Int> chart(bp.embedded.begin(), bp.embedded.end() - 1);
    bp.ambient = s.poly.chart_to_ambient(chart, h);
    out[t] = std::move(bp);
  };

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < volume; ++t) fill(t);
  } else {
    for (long long t = 0; t < volume; ++t) fill(t);
  }

  std::sort(out.begin(), out.end(), [](const BoxPoint& a, const BoxPoint& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.embedded < b.embedded;
  });
  return out;
}

}  // namespace

std::vector<BoxPoint> enumerate_box_points(const EmbeddedSimplex& s) {
  return enumerate_impl(s, true);
}

std::vector<BoxPoint> enumerate_box_points_serial(const EmbeddedSimplex& s) {
  return enumerate_impl(s, false);
}

HStarPolynomial hstar_from_box(const EmbeddedSimplex& s) {
  std::vector<Int> h(s.n() + 1, Int(0));
  for (const BoxPoint& bp : enumerate_box_points(s)) ++h[bp.height];
  return HStarPolynomial(std::move(h));
}

std::vector<std::size_t> simplex_support(const EmbeddedSimplex& s) {
  std::vector<bool> in(s.n() + 1, false);
  for (const BoxPoint& bp : enumerate_box_points(s))
    for (std::size_t i : bp.support) in[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= s.n(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace latgeo
