#include "latgeo/circuits.hpp"

#include "latgeo/ehrhart.hpp"
#include "latgeo/matrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace latgeo {

namespace {

// Embedded column matrix of the chosen vertices: chart coordinates plus a
// trailing 1, so affine dependences become linear.
IntMatrix embedded_columns(const LatticePolytope& p, const std::vector<std::size_t>& subset) {
  const std::size_t r = p.dim();
  IntMatrix m(r + 1, subset.size());
  for (std::size_t col = 0; col < subset.size(); ++col) {
    for (std::size_t row = 0; row < r; ++row)
      m.at(row, col) = p.chart_vertices()[subset[col]][row];
    m.at(r, col) = 1;
  }
  return m;
}

// A subset is a circuit iff its dependence kernel is one-dimensional with a
// relation vector that is nonzero in every position.
std::optional<Circuit> try_circuit(const LatticePolytope& p,
                                   const std::vector<std::size_t>& subset) {
  IntMatrix m = embedded_columns(p, subset);
  if (rank(m) + 1 != subset.size()) return std::nullopt;
  auto kernel = rational_nullspace(m);
  if (kernel.size() != 1) return std::nullopt;
  const auto& z = kernel.front();
  for (const Rat& q : z)
    if (q == 0) return std::nullopt;  // a proper subset is already dependent

  Int denom_lcm = 1;
  for (const Rat& q : z) denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(q));
  std::vector<Int> rel(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    rel[i] = numerator(z[i]) * (denom_lcm / denominator(z[i]));
  make_primitive(rel);
  if (rel.front() < 0)
    for (Int& x : rel) x = -x;  // lowest member goes to the positive side

  Circuit c;
  c.members = subset;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    c.coefficients.push_back(abs_int(rel[i]));
    if (rel[i] > 0)
      c.positive.push_back(subset[i]);
    else
      c.negative.push_back(subset[i]);
  }
  return c;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx;
  for (std::size_t k = 2; k <= max_size; ++k) {
    if (k > n) break;
    idx.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      out.push_back(idx);
      std::size_t i = k;
      bool done = false;
      while (i > 0) {
        --i;
        if (idx[i] != i + n - k) break;
        if (i == 0) done = true;
      }
      if (done) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Circuit> enumerate_impl(const LatticePolytope& p, bool parallel) {
  // Any dim+2 points in a dim-dimensional space are dependent, so no circuit
  // can be larger.
  const std::size_t cutoff = std::min(p.dim() + 2, p.vertex_count());
  auto subsets = all_subsets(p.vertex_count(), cutoff);
  std::vector<std::optional<Circuit>> found(subsets.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(subsets.size()); ++i)
      found[i] = try_circuit(p, subsets[i]);
  } else {
    for (std::size_t i = 0; i < subsets.size(); ++i) found[i] = try_circuit(p, subsets[i]);
  }
  std::vector<Circuit> out;
  for (auto& c : found)
    if (c) out.push_back(std::move(*c));
  std::sort(out.begin(), out.end(),
            [](const Circuit& a, const Circuit& b) { return a.members < b.members; });
  return out;
}

}  // namespace

std::vector<Circuit> enumerate_circuits(const LatticePolytope& p) {
  return enumerate_impl(p, true);
}

std::vector<Circuit> enumerate_circuits_serial(const LatticePolytope& p) {
  return enumerate_impl(p, false);
}

std::vector<std::size_t> combinatorial_pyramid_apexes(const LatticePolytope& p) {
  std::vector<bool> in_circuit(p.vertex_count(), false);
  for (const Circuit& c : enumerate_circuits(p))
    for (std::size_t i : c.members) in_circuit[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    if (!in_circuit[i]) out.push_back(i);
  return out;
}

CircuitBoundVerdict check_circuit_bound(const LatticePolytope& p) {
  CircuitBoundVerdict verdict;
  unsigned d = hstar_via_interpolation(p).degree();
  verdict.bound = 2 * static_cast<std::size_t>(d) + 2;
  for (const Circuit& c : enumerate_circuits(p)) {
    verdict.max_size = std::max(verdict.max_size, c.size());
    if (c.size() > verdict.bound && verdict.pass) {
      verdict.pass = false;
      std::ostringstream os;
      os << "circuit {";
      for (std::size_t i = 0; i < c.members.size(); ++i)
        os << (i ? "," : "") << c.members[i];
      os << "} has " << c.size() << " members, bound " << verdict.bound;
      verdict.witness = os.str();
    }
  }
  return verdict;
}

}  // namespace latgeo
