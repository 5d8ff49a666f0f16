#pragma once

#include "latgeo/numbers.hpp"

#include <cstddef>
#include <vector>

namespace latgeo {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> column(std::size_t j) const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += c * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  /// col i += c * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Exact determinant via Bareiss fraction-free elimination.
Int determinant(const IntMatrix& m);

/// Rank over the rationals, computed fraction-free over the integers.
std::size_t rank(const IntMatrix& m);

/// Column indices of the pivots of the row echelon form (leftmost choice).
std::vector<std::size_t> pivot_columns(const IntMatrix& m);

/// u * a * v = diag(diagonal), u and v unimodular, d_1 | d_2 | ... , all positive.
struct SnfResult {
  std::vector<Int> diagonal;
  IntMatrix u, v;
};
SnfResult smith_normal_form(const IntMatrix& a);

/// Canonical row Hermite normal form of the row lattice; zero rows dropped.
/// Pivots positive, entries above each pivot reduced into [0, pivot).
IntMatrix hnf_rows(const IntMatrix& a);

/// Rows form the canonical (HNF) basis of the saturated lattice
/// {x in Z^cols : a * x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Rows form the canonical basis of (row span of a over Q) intersected with Z^cols.
IntMatrix saturate_rows(const IntMatrix& a);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& u);

enum class SolveStatus { solved, singular, inconsistent };

/// Exact solution of a * x = rhs. A square rank-deficient system reports
/// `singular` whether or not it happens to be consistent; a rectangular
/// inconsistent system reports `inconsistent`. Underdetermined consistent
/// rectangular systems return the particular solution with free variables 0.
struct RationalSolveResult {
  SolveStatus status = SolveStatus::solved;
  std::vector<Rat> x;
};
RationalSolveResult solve_rational(const IntMatrix& a, const std::vector<Rat>& rhs);

/// Basis of the right kernel over Q (one vector per free column).
std::vector<std::vector<Rat>> rational_nullspace(const IntMatrix& a);

/// Exact inverse of a nonsingular square matrix, as rational rows.
std::vector<std::vector<Rat>> rational_inverse(const IntMatrix& a);

/// Divide by the gcd of the entries; all-zero vectors are left unchanged.
void make_primitive(std::vector<Int>& v);

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace latgeo
