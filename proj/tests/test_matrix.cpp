#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latgeo/generators.hpp"
#include "latgeo/matrix.hpp"
#include "oracles.hpp"

using namespace latgeo;

namespace {

IntMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, unsigned bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Int(rng.coordinate(bound));
  return m;
}

// Vertex matrix of the d=2 example simplex, columns e0-e3, e1-e3, e2-e3,
// e0+e1+e2-e3, written in the ambient coordinates of Z^4.
IntMatrix paper_example_matrix_d2() {
  return IntMatrix::from_columns({{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}, {1, 1, 1, -1}});
}

IntMatrix diag_matrix(const std::vector<Int>& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("determinant: identity and known values") {
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(abs_int(determinant(paper_example_matrix_d2())) == 2);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  IntMatrix zero(3, 3);
  CHECK(determinant(zero) == 0);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), input_error);
}

TEST_CASE("determinant matches the cofactor oracle on random matrices") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 3, 9);
    CHECK(determinant(m) == testing::cofactor_determinant(m));
  }
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 5, 5, 6);
    CHECK(determinant(m) == testing::cofactor_determinant(m));
  }
}

TEST_CASE("determinant: row swap negates, products multiply") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4, 5);
    IntMatrix swapped = m;
    swapped.swap_rows(1, 3);
    CHECK(determinant(swapped) == -determinant(m));
    IntMatrix b = random_matrix(rng, 4, 4, 5);
    CHECK(determinant(m * b) == determinant(m) * determinant(b));
  }
}

TEST_CASE("smith normal form: forced small cases") {
  SUBCASE("diag(2,3) has invariant factors (1,6)") {
    auto snf = smith_normal_form(diag_matrix({2, 3}, 2, 2));
    REQUIRE(snf.diagonal.size() == 2);
    CHECK(snf.diagonal[0] == 1);
    CHECK(snf.diagonal[1] == 6);
  }
  SUBCASE("zero matrix has empty diagonal") {
    auto snf = smith_normal_form(IntMatrix(2, 2));
    CHECK(snf.diagonal.empty());
  }
  SUBCASE("paper example vertex matrix has diagonal (1,1,1,2)") {
    auto snf = smith_normal_form(paper_example_matrix_d2());
    REQUIRE(snf.diagonal.size() == 4);
    CHECK(snf.diagonal == std::vector<Int>{1, 1, 1, 2});
    Int prod = 1;
    for (const auto& d : snf.diagonal) prod *= d;
    CHECK(prod == abs_int(determinant(paper_example_matrix_d2())));
  }
}

TEST_CASE("smith normal form invariants on random matrices") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
    IntMatrix m = random_matrix(rng, rows, cols, 7);
    auto snf = smith_normal_form(m);

    CHECK(abs_int(determinant(snf.u)) == 1);
    CHECK(abs_int(determinant(snf.v)) == 1);
    IntMatrix expected = diag_matrix(snf.diagonal, rows, cols);
    CHECK(snf.u * m * snf.v == expected);
    for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
      CHECK(snf.diagonal[i] > 0);
      CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
    }
    if (rows == cols) {
      Int det = determinant(m);
      if (det != 0) {
        Int prod = 1;
        for (const auto& d : snf.diagonal) prod *= d;
        CHECK(prod == abs_int(det));
      }
    }
  }
}

TEST_CASE("smith normal form is deterministic") {
  SplitMix64 rng(14);
  IntMatrix m = random_matrix(rng, 4, 5, 9);
  auto a = smith_normal_form(m);
  auto b = smith_normal_form(m);
  CHECK(a.diagonal == b.diagonal);
  CHECK(a.u == b.u);
  CHECK(a.v == b.v);
}

TEST_CASE("solve_rational: examples from the contract") {
  SUBCASE("identity system") {
    auto res = solve_rational(IntMatrix::identity(2), {Rat(1, 2), Rat(1, 3)});
    REQUIRE(res.status == SolveStatus::solved);
    CHECK(res.x == std::vector<Rat>{Rat(1, 2), Rat(1, 3)});
  }
  SUBCASE("paper example barycentric coordinates are all 1/2") {
    IntMatrix v = paper_example_matrix_d2();
    std::vector<Rat> rhs{Rat(1), Rat(1), Rat(1), Rat(-2)};  // e0+e1+e2-2e3
    auto res = solve_rational(v, rhs);
    REQUIRE(res.status == SolveStatus::solved);
    CHECK(res.x == std::vector<Rat>(4, Rat(1, 2)));
    // brute re-check: sum lambda_i v_i = rhs
    for (std::size_t row = 0; row < 4; ++row) {
      Rat acc(0);
      for (std::size_t col = 0; col < 4; ++col) acc += Rat(v.at(row, col)) * res.x[col];
      CHECK(acc == rhs[row]);
    }
  }
  SUBCASE("inconsistent rectangular system") {
    IntMatrix m(2, 1);
    m.at(0, 0) = 1;
    m.at(1, 0) = 1;
    auto res = solve_rational(m, {Rat(0), Rat(1)});
    CHECK(res.status == SolveStatus::inconsistent);
  }
  SUBCASE("singular square is distinguished from inconsistent") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 2;
    m.at(1, 1) = 2;
    CHECK(solve_rational(m, {Rat(1), Rat(3)}).status == SolveStatus::singular);
    CHECK(solve_rational(m, {Rat(1), Rat(2)}).status == SolveStatus::singular);
  }
}

TEST_CASE("solve_rational satisfies A x = rhs on random solvable systems") {
  SplitMix64 rng(15);
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng.below(5);
    IntMatrix m = random_matrix(rng, n, n, 6);
    std::vector<Rat> rhs(n);
    for (auto& q : rhs) q = Rat(rng.coordinate(9), 1 + rng.below(4));
    auto res = solve_rational(m, rhs);
    if (res.status != SolveStatus::solved) continue;
    ++solved;
    for (std::size_t i = 0; i < n; ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < n; ++j) acc += Rat(m.at(i, j)) * res.x[j];
      CHECK(acc == rhs[i]);
    }
  }
  CHECK(solved > 50);
}

TEST_CASE("hnf and saturation") {
  SUBCASE("row span of (2 0; 0 3) saturates to Z^2") {
    CHECK(saturate_rows(diag_matrix({2, 3}, 2, 2)) == IntMatrix::identity(2));
  }
  SUBCASE("saturation of a single even vector is the primitive vector") {
    IntMatrix m(1, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    IntMatrix s = saturate_rows(m);
    REQUIRE(s.rows() == 1);
    CHECK(s.row(0) == std::vector<Int>{1, 2});
  }
  SUBCASE("integer kernel is orthogonal to the rows and saturated") {
    SplitMix64 rng(16);
    for (int trial = 0; trial < 60; ++trial) {
      IntMatrix m = random_matrix(rng, 2, 4, 4);
      IntMatrix k = integer_kernel(m);
      CHECK(k.rows() == 4 - rank(m));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < k.rows(); ++j) CHECK(dot(m.row(i), k.row(j)) == 0);
      // saturated: elementary divisors of the kernel basis are all 1
      auto snf = smith_normal_form(k);
      for (const auto& d : snf.diagonal) CHECK(d == 1);
    }
  }
}

TEST_CASE("unimodular inverse round-trips") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 3, 4);
    auto snf = smith_normal_form(m);
    IntMatrix ui = inverse_unimodular(snf.u);
    CHECK(snf.u * ui == IntMatrix::identity(3));
  }
}
