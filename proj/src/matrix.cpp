#include "latgeo/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <utility>

namespace latgeo {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw internal_error("ragged row list");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
  return from_rows(cols).transposed();
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw internal_error("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw input_error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && w.at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      w.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss update: exact division by the previous pivot.
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

namespace {

std::size_t echelon_pivots(IntMatrix w, std::vector<std::size_t>* pivots) {
  const std::size_t rows = w.rows(), cols = w.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && w.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    w.swap_rows(pivot, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(r, col) - w.at(i, col) * w.at(r, j)) / prev;
      }
      w.at(i, col) = 0;
    }
    prev = w.at(r, col);
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return echelon_pivots(m, nullptr); }

std::vector<std::size_t> pivot_columns(const IntMatrix& m) {
  std::vector<std::size_t> pivots;
  echelon_pivots(m, &pivots);
  return pivots;
}

namespace {

// Smallest-absolute-value nonzero entry of d in the submatrix starting at t,
// ties broken by lowest (row, col). Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& e = d.at(i, j);
      if (e == 0) continue;
      Int a = abs_int(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t bound = std::min(m, n);

  for (std::size_t t = 0; t < bound; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(d, t, pi, pj)) break;
    while (true) {
      d.swap_rows(pi, t);
      u.swap_rows(pi, t);
      d.swap_cols(pj, t);
      v.swap_cols(pj, t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        if (q != 0) {
          d.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
        if (d.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) {
          d.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        if (!find_pivot(d, t, pi, pj)) throw internal_error("snf lost its pivot");
        continue;
      }

      // Pivot must divide every entry of the remaining submatrix so the
      // divisibility chain holds; fold a violating row in and keep reducing.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
      if (!find_pivot(d, t, pi, pj)) throw internal_error("snf lost its pivot");
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SnfResult result;
  result.u = std::move(u);
  result.v = std::move(v);
  for (std::size_t t = 0; t < bound; ++t) {
    if (d.at(t, t) == 0) break;
    result.diagonal.push_back(d.at(t, t));
  }
  return result;
}

IntMatrix hnf_rows(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    // Euclid on the column below r until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == rows || abs_int(h.at(i, col)) < abs_int(h.at(best, col))) best = i;
      }
      if (best == rows) break;  // column clear
      h.swap_rows(best, r);
      bool others = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(r, col);
        h.add_row_multiple(i, r, -q);
        if (h.at(i, col) != 0) others = true;
      }
      if (!others) {
        if (h.at(r, col) < 0) h.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
          Int q = floor_div(h.at(i, col), h.at(r, col));
          if (q != 0) h.add_row_multiple(i, r, -q);
        }
        ++r;
        break;
      }
    }
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(n);
  SnfResult snf = smith_normal_form(a);
  const std::size_t r = snf.diagonal.size();
  IntMatrix k(n - r, n);
  for (std::size_t idx = r; idx < n; ++idx)
    for (std::size_t j = 0; j < n; ++j) k.at(idx - r, j) = snf.v.at(j, idx);
  return hnf_rows(k);
}

IntMatrix saturate_rows(const IntMatrix& a) { return integer_kernel(integer_kernel(a)); }

IntMatrix inverse_unimodular(const IntMatrix& u) {
  auto inv = rational_inverse(u);
  IntMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      if (!is_integer(inv[i][j])) throw internal_error("matrix is not unimodular");
      out.at(i, j) = numerator(inv[i][j]);
    }
  return out;
}

namespace {

// Reduced row echelon form over Q of [a | extra]; returns pivot columns.
struct Rref {
  std::vector<std::vector<Rat>> m;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(std::vector<std::vector<Rat>> m) {
  Rref out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    Rat inv = Rat(1) / m[r][col];
    for (std::size_t j = col; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

std::vector<std::vector<Rat>> to_rat_rows(const IntMatrix& a, std::size_t extra_cols) {
  std::vector<std::vector<Rat>> m(a.rows(), std::vector<Rat>(a.cols() + extra_cols));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rat(a.at(i, j));
  return m;
}

}  // namespace

RationalSolveResult solve_rational(const IntMatrix& a, const std::vector<Rat>& rhs) {
  if (rhs.size() != a.rows()) throw input_error("solve: rhs length mismatch");
  auto m = to_rat_rows(a, 1);
  for (std::size_t i = 0; i < a.rows(); ++i) m[i][a.cols()] = rhs[i];
  Rref red = rref(std::move(m));

  RationalSolveResult result;
  bool inconsistent =
      !red.pivot_cols.empty() && red.pivot_cols.back() == a.cols();
  if (a.is_square() && a.rows() > 0) {
    std::size_t rank_a = red.pivot_cols.size() - (inconsistent ? 1 : 0);
    if (rank_a < a.cols()) {
      result.status = SolveStatus::singular;
      return result;
    }
  }
  if (inconsistent) {
    result.status = SolveStatus::inconsistent;
    return result;
  }
  result.x.assign(a.cols(), Rat(0));
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
    result.x[red.pivot_cols[r]] = red.m[r][a.cols()];
  return result;
}

std::vector<std::vector<Rat>> rational_nullspace(const IntMatrix& a) {
  Rref red = rref(to_rat_rows(a, 0));
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> vec(a.cols(), Rat(0));
    vec[free_col] = 1;
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
      vec[red.pivot_cols[r]] = -red.m[r][free_col];
    basis.push_back(std::move(vec));
  }
  return basis;
}

std::vector<std::vector<Rat>> rational_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw input_error("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  auto m = to_rat_rows(a, n);
  for (std::size_t i = 0; i < n; ++i) m[i][n + i] = 1;
  Rref red = rref(std::move(m));
  if (red.pivot_cols.size() != n || (n > 0 && red.pivot_cols.back() != n - 1))
    throw input_error("inverse of a singular matrix");
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = red.m[i][n + j];
  return out;
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g <= 1) return;
  for (Int& x : v) x /= g;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) throw internal_error("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace latgeo
