#include "latgeo/ehrhart.hpp"

#include <algorithm>

namespace latgeo {

HStarPolynomial::HStarPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw internal_error("h* must have at least one coefficient");
  if (c_.front() != 1) throw internal_error("h*_0 must be 1");
  for (const Int& x : c_)
    if (x < 0) throw internal_error("h* coefficients must be non-negative");
}

unsigned HStarPolynomial::degree() const {
  for (std::size_t i = c_.size(); i > 0; --i)
    if (c_[i - 1] != 0) return static_cast<unsigned>(i - 1);
  return 0;
}

Int HStarPolynomial::sum() const {
  Int s = 0;
  for (const Int& x : c_) s += x;
  return s;
}

std::vector<Int> HStarPolynomial::padded(std::size_t length) const {
  if (length < c_.size()) throw internal_error("padding shorter than h*");
  std::vector<Int> out = c_;
  out.resize(length, Int(0));
  return out;
}

HStarPolynomial hstar_via_interpolation(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  std::vector<Int> counts(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    counts[k] = lattice_point_count(p, static_cast<unsigned>(k));

  // h*_j = sum_{i=0}^{j} (-1)^{j-i} C(n+1, j-i) L(i)
  std::vector<Int> h(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    Int acc = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      Int term = binomial(Int(n + 1), Int(j - i)) * counts[i];
      if ((j - i) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (acc < 0) throw internal_error("negative h* coefficient: lattice point counts are wrong");
    h[j] = acc;
  }
  return HStarPolynomial(std::move(h));
}

unsigned codegree(const LatticePolytope& p) {
  return static_cast<unsigned>(p.dim()) + 1 - hstar_via_interpolation(p).degree();
}

unsigned codegree_by_interior(const LatticePolytope& p) {
  for (unsigned k = 1; k <= p.dim() + 1; ++k)
    if (interior_lattice_point_count(p, k) > 0) return k;
  throw internal_error("no interior points up to dilation dim+1");
}

}  // namespace latgeo
