#include <gtest/gtest.h>

#include <vector>

#include "mapenum/errors.hpp"
#include "mapenum/combinatorics.hpp"

using namespace mapenum;

TEST(DoubleFactorial, SmallValues) {
  EXPECT_EQ(double_factorial(1), 1);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(13), 135135);
}

TEST(DoubleFactorial, RejectsEvenAndTooNegative) {
  EXPECT_THROW(double_factorial(4), PreconditionError);
  EXPECT_THROW(double_factorial(-3), PreconditionError);
}

TEST(Binomial, ZeroOutsideRange) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_THROW(binomial(-1, 0), PreconditionError);
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(multinomial({0, 0, 0}), 1);
  EXPECT_EQ(multinomial({1, 1, 1}), 6);
  EXPECT_EQ(multinomial({2, -1, 1}), 0);
}

TEST(Multinomial, TelescopesIntoBinomials) {
  for (long a = 0; a <= 6; ++a) {
    for (long b = 0; a + b <= 9; ++b) {
      for (long c = 0; a + b + c <= 12; ++c) {
        EXPECT_EQ(multinomial({a, b, c}), binomial(a + b + c, a) * binomial(b + c, b)) << a << " " << b << " " << c;
      }
    }
  }
}

TEST(ReciprocalFactorial, VanishesOnNegatives) {
  EXPECT_EQ(reciprocal_factorial(-1), 0);
  EXPECT_EQ(reciprocal_factorial(-7), 0);
  EXPECT_EQ(reciprocal_factorial(0), 1);
  EXPECT_EQ(reciprocal_factorial(4), Rational(1, 24));
}

TEST(ToInteger, AssertsIntegrality) {
  EXPECT_EQ(to_integer(Rational(12, 4), "ok"), 3);
  EXPECT_THROW(to_integer(Rational(1, 2), "half"), IntegralityError);
}

TEST(Factorial, Large) {
  EXPECT_EQ(to_string(factorial(25)), "15511210043330985984000000");
  EXPECT_THROW(factorial(-1), PreconditionError);
}
