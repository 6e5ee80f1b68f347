#include "phall/ffla.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace phall;

namespace {

Matrix from_rows(std::vector<std::vector<int>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int q) {
  Matrix m(r, c);
  std::uniform_int_distribution<int> d(0, q - 1);
  for (int& x : m.entries) x = d(rng);
  return m;
}

}  // namespace

TEST(Field, InversesMultiplyToOne) {
  for (int q : {2, 3, 5, 7, 11}) {
    FieldOrder f(q);
    for (int a = 1; a < q; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1) << "q=" << q << " a=" << a;
  }
}

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(FieldOrder(4), std::invalid_argument);
  EXPECT_THROW(FieldOrder(1), std::invalid_argument);
  EXPECT_FALSE(is_prime(9));
  EXPECT_TRUE(is_prime(13));
}

TEST(Rref, SmallCases) {
  FieldOrder f2(2), f3(3);
  auto id = rref(Matrix::identity(2), f2);
  EXPECT_EQ(id.rank, 2u);
  EXPECT_EQ(id.form, Matrix::identity(2));

  auto ones = rref(from_rows({{1, 1}, {1, 1}}), f2);
  EXPECT_EQ(ones.rank, 1u);
  EXPECT_EQ(ones.form, from_rows({{1, 1}, {0, 0}}));

  auto perm = rref(from_rows({{0, 1}, {1, 0}}), f3);
  EXPECT_EQ(perm.rank, 2u);
  EXPECT_EQ(perm.form, Matrix::identity(2));
}

TEST(Kernel, SmallCases) {
  FieldOrder f2(2);
  EXPECT_EQ(kernel_basis(Matrix(2, 2), f2).cols, 2u);
  EXPECT_EQ(kernel_basis(Matrix::identity(2), f2).cols, 0u);
  // Enumerate all of F_2^2 and keep what [[1,1]] kills.
  const Matrix a = from_rows({{1, 1}});
  std::vector<std::vector<int>> killed;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      if ((x + y) % 2 == 0 && (x || y)) killed.push_back({x, y});
    }
  }
  const Matrix k = kernel_basis(a, f2);
  ASSERT_EQ(k.cols, 1u);
  ASSERT_EQ(killed.size(), 1u);
  EXPECT_EQ(k(0, 0), killed[0][0]);
  EXPECT_EQ(k(1, 0), killed[0][1]);
}

TEST(Kernel, RankNullityAndAnnihilation) {
  std::mt19937 rng(7);
  for (int q : {2, 3, 5}) {
    FieldOrder f(q);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      const Matrix a = random_matrix(rng, r, c, q);
      const Matrix k = kernel_basis(a, f);
      EXPECT_EQ(rank(a, f) + k.cols, c);
      EXPECT_TRUE(multiply(a, k, f).is_zero());
      EXPECT_EQ(rank(k, f), k.cols);
      EXPECT_EQ(rank(image_basis(a, f), f), rank(a, f));
      EXPECT_EQ(rank(transpose(a), f), rank(a, f));
    }
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937 rng(11);
  for (int q : {2, 3, 5}) {
    FieldOrder f(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const Matrix a = random_matrix(rng, n, n, q);
      if (!is_invertible(a, f)) {
        EXPECT_LT(rank(a, f), n);
        continue;
      }
      EXPECT_EQ(multiply(a, inverse(a, f), f), Matrix::identity(n));
    }
  }
}

TEST(Solve, FindsSolutionsWhenConsistent) {
  std::mt19937 rng(3);
  FieldOrder f(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = random_matrix(rng, 3, 4, 3);
    const Matrix x = random_matrix(rng, 4, 1, 3);
    const Matrix b = multiply(a, x, f);
    auto sol = solve(a, b, f);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(multiply(a, *sol, f), b);
  }
  EXPECT_FALSE(solve(Matrix(1, 1), from_rows({{1}}), f).has_value());
}

TEST(GlOrder, MatchesEnumeration) {
  EXPECT_EQ(gl_order(0, FieldOrder(5)), 1u);
  EXPECT_EQ(gl_order(2, FieldOrder(2)), 6u);
  EXPECT_EQ(gl_order(1, FieldOrder(3)), 2u);
  for (int q : {2, 3}) {
    FieldOrder f(q);
    for (unsigned n = 1; n <= 2; ++n) {
      std::uint64_t count = 0;
      for (const Matrix& m : enumerate_matrices(n, n, f)) count += is_invertible(m, f) ? 1 : 0;
      EXPECT_EQ(count, gl_order(n, f)) << "n=" << n << " q=" << q;
    }
  }
}

TEST(EnumerateMatrices, Counts) {
  FieldOrder f2(2);
  EXPECT_EQ(enumerate_matrices(0, 3, f2).size(), 1u);
  EXPECT_EQ(enumerate_matrices(1, 1, f2).size(), 2u);
  const auto all = enumerate_matrices(2, 2, f2);
  EXPECT_EQ(all.size(), 16u);
  std::set<Matrix> distinct;
  for (const Matrix& m : all) distinct.insert(m);
  EXPECT_EQ(distinct.size(), 16u);
  EXPECT_THROW(enumerate_matrices(5, 5, f2, 1000), BudgetExceeded);
}

TEST(EnumerateSubspaces, GaussianBinomials) {
  // [4 choose 2]_2 = 35, [3 choose 1]_3 = 13.
  EXPECT_EQ(enumerate_subspaces(4, 2, FieldOrder(2)).size(), 35u);
  EXPECT_EQ(enumerate_subspaces(3, 1, FieldOrder(3)).size(), 13u);
  EXPECT_EQ(enumerate_subspaces(3, 0, FieldOrder(3)).size(), 1u);
}

TEST(CheckedPow, DetectsOverflow) {
  EXPECT_EQ(checked_pow(3, 4), 81u);
  EXPECT_THROW(checked_pow(2, 70), std::overflow_error);
}
