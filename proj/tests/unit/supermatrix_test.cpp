#include <gtest/gtest.h>

#include "gqs/linear_algebra.hpp"
#include "gqs/super_matrix.hpp"

using gqs::ExactScalar;
using gqs::SuperMatrix;

namespace {

SuperMatrix e(int size, int r, int c, const ExactScalar& k = 1) { return SuperMatrix::unit(size, r, c, k); }

// osp(1|2) para-Bose pair written out entrywise; row 1 even, rows 2 and 3 odd.
SuperMatrix b_minus() { return (e(3, 1, 3) + e(3, 2, 1)) * -ExactScalar::sqrt2(); }
SuperMatrix b_plus() { return (e(3, 1, 2) - e(3, 3, 1)) * ExactScalar::sqrt2(); }

}  // namespace

TEST(SuperMatrix, ProductOfUnits) {
  EXPECT_EQ(e(3, 1, 2) * e(3, 2, 3), e(3, 1, 3));
  EXPECT_TRUE((e(3, 1, 2) * e(3, 1, 3)).is_zero());
}

TEST(SuperMatrix, BracketSignFollowsDegrees) {
  const SuperMatrix x = e(3, 1, 2), y = e(3, 2, 1);
  EXPECT_EQ(gqs::superbracket(x, y, 0, 0), e(3, 1, 1) - e(3, 2, 2));
  EXPECT_EQ(gqs::superbracket(x, y, 1, 1), e(3, 1, 1) + e(3, 2, 2));
}

TEST(SuperMatrix, ParityFromLayout) {
  const gqs::ParityLayout theta{0, 1, 1};
  EXPECT_EQ(e(3, 1, 2).parity(theta), gqs::Parity::Odd);
  EXPECT_EQ(e(3, 2, 3).parity(theta), gqs::Parity::Even);
  EXPECT_EQ((e(3, 1, 2) + e(3, 2, 3)).parity(theta), gqs::Parity::Mixed);
  EXPECT_EQ(SuperMatrix(3).parity(theta), gqs::Parity::Zero);
  EXPECT_THROW(gqs::superbracket(e(3, 1, 2) + e(3, 2, 3), e(3, 1, 1), theta), std::exception);
}

TEST(SuperMatrix, Supertrace) {
  const gqs::ParityLayout theta{0, 0, 1};
  EXPECT_EQ(SuperMatrix::identity(3).supertrace(theta), ExactScalar(1));
  EXPECT_EQ((e(3, 1, 1) + e(3, 3, 3)).supertrace(theta), ExactScalar(0));
}

// Hand-multiplied: B^- B^+ = 2e11 - 2e22 and B^+ B^- = -2e11 + 2e33.
TEST(SuperMatrix, OspOneTwoAnticommutator) {
  const SuperMatrix anti = gqs::superbracket(b_minus(), b_plus(), 1, 1);
  EXPECT_EQ(anti, e(3, 2, 2, -2) + e(3, 3, 3, 2));
  // [[{B^-,B^+}, B^-]] = -2B^-
  EXPECT_EQ(gqs::superbracket(anti, b_minus(), 0, 1), b_minus() * ExactScalar(-2));
}

TEST(SpanSolver, RankOfSlTwoOne) {
  // sl(2|1): 6 off-diagonal units plus two supertraceless diagonals.
  std::vector<SuperMatrix> basis;
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c)
      if (r != c) basis.push_back(e(3, r, c));
  basis.push_back(e(3, 1, 1) - e(3, 2, 2));
  basis.push_back(e(3, 2, 2) + e(3, 3, 3));
  EXPECT_EQ(gqs::span_rank(basis), 8u);

  gqs::SpanSolver solver(basis);
  EXPECT_FALSE(solver.contains(SuperMatrix::identity(3)));
  const gqs::BasisExpansion x = solver.express(e(3, 1, 1) + e(3, 3, 3));
  ASSERT_TRUE(x.residual_zero);
  EXPECT_EQ(x.coefficients.at(6), ExactScalar(1));
  EXPECT_EQ(x.coefficients.at(7), ExactScalar(1));
}

TEST(SpanSolver, IncrementalInsertAndKernel) {
  gqs::SpanSolver solver;
  EXPECT_TRUE(solver.add(e(2, 1, 1)));
  EXPECT_TRUE(solver.add(e(2, 1, 1) * ExactScalar::sqrt2() + e(2, 2, 2)));
  EXPECT_FALSE(solver.add(e(2, 2, 2) * ExactScalar(3)));
  EXPECT_EQ(solver.rank(), 2u);
  EXPECT_EQ(solver.inserted(), 3u);
  ASSERT_EQ(solver.dependencies().size(), 1u);
}

TEST(SpanSolver, NullspaceOfDependentSet) {
  const std::vector<SuperMatrix> v{e(2, 1, 2), e(2, 2, 1), e(2, 1, 2) * ExactScalar(2) - e(2, 2, 1)};
  const auto kernel = gqs::nullspace(v);
  ASSERT_EQ(kernel.size(), 1u);
  SuperMatrix sum(2);
  for (std::size_t i = 0; i < v.size(); ++i) sum += v[i] * kernel[0][i];
  EXPECT_TRUE(sum.is_zero());
}

TEST(SpanSolver, EchelonFormIsReproducible) {
  const std::vector<gqs::SparseVector> rows{{{0, 2}, {1, 4}}, {{1, 1}, {2, ExactScalar::sqrt2()}}, {{0, 1}, {2, 1}}};
  EXPECT_EQ(gqs::rref(rows), gqs::rref(rows));
  const auto r = gqs::rref(rows);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].at(0), ExactScalar(1));
}
