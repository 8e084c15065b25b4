#include <doctest.h>

#include "krein/elimination.hpp"
#include "krein/rng.hpp"
#include "support/reference.hpp"

using namespace krein;
using krein::testing::reference_rank;
using krein::testing::reference_rref;

TEST_SUITE_BEGIN("elimination");

TEST_CASE("rref basics") {
  const RrefResult r = rref(Matrix::from_rows({{2, 4}, {1, 2}}));
  CHECK(r.r == Matrix::from_rows({{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.rank == 1);

  const RrefResult z = rref(Matrix::zero(3, 3));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
}

TEST_CASE("rref is idempotent") {
  Rng rng(1001);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng.below(5);
    const std::size_t cols = 1 + rng.below(5);
    const Matrix m = random_matrix(rng, rows, cols, 4);
    const Matrix r = rref(m).r;
    CHECK(rref(r).r == r);
  }
}

TEST_CASE("rref agrees with the plain rational eliminator") {
  Rng rng(1002);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng.below(8);
    const std::size_t cols = 1 + rng.below(8);
    Matrix m = trial % 3 == 0 ? random_integer_matrix(rng, rows, cols, 5)
                              : random_matrix(rng, rows, cols, 5);
    if (trial % 4 == 0 && cols > 1) {
      // plant a dependent column to exercise rank deficiency
      for (std::size_t i = 0; i < rows; ++i) m(i, cols - 1) = m(i, 0) * Gaussian(2);
    }
    if (trial % 5 == 0) {
      // sparse rows force mid-stream pivot swaps
      for (std::size_t i = 0; i < rows; i += 2)
        for (std::size_t j = 0; j < cols / 2; ++j) m(i, j) = Gaussian(0);
    }
    const RrefResult ours = rref(m);
    const auto ref = reference_rref(m);
    CHECK(ours.r == ref.r);
    CHECK(ours.pivots == ref.pivots);
  }

  // tall and wide extremes
  Rng rng2(1012);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix tall = random_integer_matrix(rng2, 12, 2, 4);
    CHECK(rref(tall).r == reference_rref(tall).r);
    const Matrix wide = random_matrix(rng2, 2, 12, 4);
    CHECK(rref(wide).r == reference_rref(wide).r);
  }
}

TEST_CASE("observability stack of the rank-one defect") {
  // D = diag(0,0,0,0,2) with A = J_5(1): every row of D A^j points along
  // e5*, so the 25x5 stack has rank 1.
  const Matrix a = jordan_block(5, Gaussian(1));
  Matrix d(5, 5);
  d(4, 4) = Gaussian(2);
  std::vector<Matrix> stack;
  Matrix cur = d;
  for (int j = 0; j < 5; ++j) {
    stack.push_back(cur);
    cur = cur * a;
  }
  const Matrix s = vstack(stack);
  CHECK(s.rows() == 25);
  CHECK(reference_rank(s) == 1);
  CHECK(rank(s) == 1);
}

TEST_CASE("kernel: identity, zero, and the rank-nullity identity") {
  CHECK(kernel(Matrix::identity(4)).cols() == 0);
  CHECK(kernel(Matrix::zero(3, 3)) == Matrix::identity(3));

  // rank-two diagonal-corner defect: the kernel comes out as exactly the
  // first three unit vectors, in order
  Matrix d(5, 5);
  d.set_block(3, 3, Matrix::from_rows({{5, 8}, {8, 16}}));
  Matrix expected(5, 3);
  expected(0, 0) = expected(1, 1) = expected(2, 2) = Gaussian(1);
  CHECK(kernel(d) == expected);

  Rng rng(1003);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng.below(5);
    const std::size_t cols = 1 + rng.below(5);
    const Matrix m = random_matrix(rng, rows, cols, 4);
    const Matrix k = kernel(m);
    CHECK(k.cols() == cols - rank(m));
    CHECK((m * k).is_zero());
    if (k.cols() > 0) CHECK(rank(k) == k.cols());
  }
}

TEST_CASE("solve returns the free-variables-zero particular solution") {
  const auto x = solve(Matrix::from_rows({{1, 1}}), Matrix::from_rows({{1}}));
  REQUIRE(x.has_value());
  CHECK(*x == Matrix::from_rows({{1}, {0}}));

  const Matrix b = Matrix::from_rows({{3, 1}, {-2, 0}});
  const auto y = solve(Matrix::identity(2), b);
  REQUIRE(y.has_value());
  CHECK(*y == b);

  // inconsistent system
  const auto none = solve(Matrix::from_rows({{1, 1}, {1, 1}}), Matrix::from_rows({{0}, {1}}));
  CHECK_FALSE(none.has_value());
}

TEST_CASE("solve is exact on random consistent systems") {
  Rng rng(1004);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng.below(4);
    const std::size_t cols = 1 + rng.below(4);
    const Matrix a = random_matrix(rng, rows, cols, 3);
    const Matrix x_any = random_matrix(rng, cols, 2, 3);
    const Matrix b = a * x_any;
    const auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
}

TEST_CASE("inverse basics") {
  CHECK(*inverse(Matrix::identity(3)) == Matrix::identity(3));

  const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  CHECK(*inverse(swap) == swap);

  // back-substitution gives alternating signs on the superdiagonals
  const Matrix j3 = jordan_block(3, Gaussian(1));
  CHECK(*inverse(j3) == Matrix::from_rows({{1, -1, 1}, {0, 1, -1}, {0, 0, 1}}));

  CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})).has_value());
  CHECK_THROWS_AS(inverse(Matrix(2, 3)), Error);
  CHECK(inverse(Matrix(0, 0)).has_value());
}

TEST_CASE("inverse round-trips on random invertible matrices") {
  Rng rng(1005);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const Matrix m = random_matrix(rng, n, n, 4);
    const auto inv = inverse(m);
    if (!inv) {
      CHECK(rank(m) < n);
      continue;
    }
    CHECK(*inv * m == Matrix::identity(n));
    CHECK(m * *inv == Matrix::identity(n));
  }
}

TEST_CASE("empty shapes") {
  CHECK(rref(Matrix(0, 4)).rank == 0);
  CHECK(kernel(Matrix(0, 4)) == Matrix::identity(4));
  CHECK(rref(Matrix(4, 0)).rank == 0);
  CHECK(kernel(Matrix(4, 0)).cols() == 0);
}

TEST_SUITE_END();
