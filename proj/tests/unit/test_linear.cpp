#include <gtest/gtest.h>

#include "coxfree/errors.hpp"
#include "coxfree/linear_solve.hpp"
#include "coxfree/poly_matrix.hpp"
#include "support.hpp"

using namespace coxfree;
using coxfree::testing::random_polynomial;
using coxfree::testing::var;

TEST(ScalarMatrix, InverseAndDeterminant) {
  const ScalarMatrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(m.determinant(), Scalar(18));
  EXPECT_EQ(m * m.inverse(), ScalarMatrix::identity(3));
  EXPECT_EQ(m.rank(), 3u);
  const ScalarMatrix singular{{1, 2}, {2, 4}};
  EXPECT_EQ(singular.rank(), 1u);
  EXPECT_TRUE(singular.determinant().is_zero());
  EXPECT_TRUE(m.is_symmetric());
}

TEST(RowEchelon, SolvesAndReportsKernel) {
  // x + y + z = 6, x - y = 0
  RowEchelon ech(3);
  ech.add_equation({{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1)}}, Scalar(6));
  ech.add_equation({{0, Scalar(1)}, {1, Scalar(-1)}});
  ASSERT_TRUE(ech.consistent());
  const auto sol = ech.solve();
  ASSERT_EQ(sol.particular.size(), 3u);
  EXPECT_EQ(sol.particular[0] + sol.particular[1] + sol.particular[2], Scalar(6));
  EXPECT_EQ(sol.particular[0], sol.particular[1]);
  const auto kernel = ech.kernel();
  ASSERT_EQ(kernel.size(), 1u);
  EXPECT_EQ(kernel[0][0] + kernel[0][1] + kernel[0][2], Scalar(0));
  EXPECT_EQ(kernel[0][0], kernel[0][1]);
}

TEST(RowEchelon, Inconsistent) {
  RowEchelon ech(2);
  ech.add_equation({{0, Scalar(1)}, {1, Scalar(1)}}, Scalar(1));
  ech.add_equation({{0, Scalar(2)}, {1, Scalar(2)}}, Scalar(3));
  EXPECT_FALSE(ech.consistent());
  EXPECT_THROW(ech.solve(), NoSolution);
}

TEST(RowEchelon, UnsortedRowsAreMerged) {
  RowEchelon a(3);
  a.add_equation({{2, Scalar(1)}, {0, Scalar(1)}, {2, Scalar(1)}});
  RowEchelon b(3);
  b.add_equation({{0, Scalar(1)}, {2, Scalar(2)}});
  EXPECT_EQ(a.kernel(), b.kernel());
}

TEST(SolveLinear, MatchesInverse) {
  const ScalarMatrix m{{1, 2}, {3, 5}};
  const auto sol = solve_linear(m, {Scalar(1), Scalar(2)});
  const auto inv = m.inverse();
  EXPECT_EQ(sol.particular[0], inv(0, 0) + inv(0, 1) * Scalar(2));
  EXPECT_EQ(sol.particular[1], inv(1, 0) + inv(1, 1) * Scalar(2));
  EXPECT_TRUE(sol.kernel.empty());
}

TEST(PolyMatrix, TwoByTwoDeterminant) {
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  PolyMatrix m(2, 2, 2);
  m(0, 0) = Scalar(2) * x;
  m(0, 1) = Scalar(2) * x * y * y;
  m(1, 0) = Scalar(2) * y;
  m(1, 1) = Scalar(2) * x * x * y;
  EXPECT_EQ(determinant(m), Scalar(4) * x.pow(3) * y - Scalar(4) * x * y.pow(3));
}

TEST(PolyMatrix, BareissAgreesWithCofactorExpansion) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      PolyMatrix m(n, n, 3);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = random_polynomial(rng, 3, 2, 3);
      EXPECT_EQ(determinant_bareiss(m), determinant_cofactor(m)) << "n = " << n;
    }
  }
}

TEST(PolyMatrix, CofactorsGiveAdjugate) {
  std::mt19937_64 rng(23);
  const std::size_t n = 3;
  PolyMatrix m(n, n, 2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_polynomial(rng, 2, 2, 3);
  const auto cof = cofactor_matrix(m);
  const auto det = determinant(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial sum(2);
      for (std::size_t k = 0; k < n; ++k) sum += m(i, k) * cof(j, k);
      EXPECT_EQ(sum, i == j ? det : Polynomial(2));
    }
  }
}
