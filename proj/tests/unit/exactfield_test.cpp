#include <gtest/gtest.h>

#include <random>

#include "gqs/exact_scalar.hpp"

using gqs::ExactScalar;

TEST(ExactScalar, SqrtTwoSquaresToTwo) {
  const ExactScalar r = ExactScalar::sqrt2();
  EXPECT_EQ(r * r, ExactScalar(2));
  EXPECT_TRUE((r * r).is_rational());
  EXPECT_FALSE(r.is_rational());
}

TEST(ExactScalar, FractionsAreCanonical) {
  EXPECT_EQ(ExactScalar::fraction(2, 4), ExactScalar::fraction(1, 2));
  EXPECT_EQ(ExactScalar::fraction(3, -6), ExactScalar::fraction(-1, 2));
  EXPECT_EQ(ExactScalar::fraction(1, 3) + ExactScalar::fraction(2, 3), ExactScalar(1));
}

TEST(ExactScalar, InverseOfSurd) {
  // (1+√2)(√2-1) = 1
  const ExactScalar a = ExactScalar(1) + ExactScalar::sqrt2();
  EXPECT_EQ(a.inverse(), ExactScalar::sqrt2() - ExactScalar(1));
  EXPECT_EQ(a / a, ExactScalar(1));
  // 1/√2 = √2/2
  EXPECT_EQ(ExactScalar(1) / ExactScalar::sqrt2(), ExactScalar::sqrt2() * ExactScalar::fraction(1, 2));
}

TEST(ExactScalar, DivisionByZeroThrows) {
  EXPECT_THROW(ExactScalar(0).inverse(), gqs::DivisionByZero);
  EXPECT_THROW(ExactScalar(3) / ExactScalar(0), gqs::DivisionByZero);
}

TEST(ExactScalar, Rendering) {
  EXPECT_EQ(ExactScalar(0).str(), "0");
  EXPECT_EQ(ExactScalar(-3).str(), "-3");
  EXPECT_EQ(ExactScalar::fraction(1, 2).str(), "1/2");
  EXPECT_EQ(ExactScalar::sqrt2().str(), "√2");
  EXPECT_EQ((ExactScalar(1) - ExactScalar::sqrt2() * ExactScalar(2)).str(), "1-2√2");
}

// Field axioms on random elements a + b√2 with small rational parts.
TEST(ExactScalar, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto draw = [&] {
    return ExactScalar::fraction(num(rng), den(rng)) + ExactScalar::fraction(num(rng), den(rng)) * ExactScalar::sqrt2();
  };
  for (int s = 0; s < 300; ++s) {
    const ExactScalar a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, ExactScalar(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), ExactScalar(1));
  }
}
