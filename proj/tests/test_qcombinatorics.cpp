#include "qortho/qcombinatorics.hpp"

#include <gtest/gtest.h>

using namespace qortho;

TEST(QCombinatorics, Brackets) {
  EXPECT_TRUE(q_bracket(0).is_zero());
  EXPECT_EQ(q_bracket(3), (QPolynomial{1, 1, 1}));
  EXPECT_EQ(q_bracket(2, QBase(2)), (QPolynomial{1, 0, 1}));
  EXPECT_EQ(q_bracket(5).evaluate(1), 5);
  EXPECT_THROW(QBase(0), std::invalid_argument);
}

TEST(QCombinatorics, Factorial) {
  EXPECT_EQ(q_factorial(0), QPolynomial(1));
  EXPECT_EQ(q_factorial(3), (QPolynomial{1, 2, 2, 1}));
  EXPECT_EQ(q_factorial(6).evaluate(1), 720);
}

TEST(QCombinatorics, GaussianBinomial) {
  EXPECT_EQ(q_binomial(4, 2), (QPolynomial{1, 1, 2, 1, 1}));
  EXPECT_TRUE(q_binomial(3, 5).is_zero());
  EXPECT_TRUE(q_binomial(3, -1).is_zero());
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= n; ++k) {
      EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
      EXPECT_EQ(q_binomial(n, k) * q_factorial(k) * q_factorial(n - k), q_factorial(n));
      if (n >= 1 && k >= 1) {
        EXPECT_EQ(q_binomial(n, k),
                  q_binomial(n - 1, k - 1) + QPolynomial::monomial(static_cast<std::size_t>(k)) * q_binomial(n - 1, k));
      }
    }
}

TEST(QCombinatorics, Pochhammer) {
  // (-q; q)_2 = (1+q)(1+q^2)
  EXPECT_EQ(q_pochhammer_signed(-1, 1, 2), (QPolynomial{1, 1, 1, 1}));
  // (q; q)_2 = (1-q)(1-q^2)
  EXPECT_EQ(q_pochhammer_signed(1, 1, 2), (QPolynomial{1, -1, -1, 1}));
  EXPECT_EQ(q_pochhammer_signed(-1, 3, 0), QPolynomial(1));
  EXPECT_THROW(q_pochhammer_signed(2, 1, 1), std::invalid_argument);
}

TEST(QCombinatorics, DoubleFactorials) {
  EXPECT_EQ(q_double_factorial(0, Parity::odd), QPolynomial(1));
  EXPECT_EQ(q_double_factorial(2, Parity::odd), q_bracket(1) * q_bracket(3));
  EXPECT_EQ(q_double_factorial(2, Parity::even), q_bracket(2) * q_bracket(4));
  for (long n = 0; n <= 8; ++n)
    EXPECT_EQ(q_double_factorial(n, Parity::odd) * q_double_factorial(n, Parity::even), q_factorial(2 * n));
  EXPECT_THROW(q_double_factorial(-1, Parity::odd), std::invalid_argument);
}

TEST(QCombinatorics, Multifactorial) {
  EXPECT_EQ(q_multifactorial(7, 3), q_bracket(7) * q_bracket(4));
  EXPECT_EQ(q_multifactorial(1, 2), QPolynomial(1));
  EXPECT_EQ(q_multifactorial(6, 1), q_factorial(6));
  EXPECT_EQ(q_multifactorial(9, 2), q_double_factorial(5, Parity::odd));
  EXPECT_THROW(q_multifactorial(4, 0), std::invalid_argument);
}

TEST(QCombinatorics, PowerOfBinom2) {
  EXPECT_EQ(q_power_binom2(4), QPolynomial::monomial(6));
  EXPECT_EQ(binom2(0), 0);
  EXPECT_EQ(binom2(1), 0);
}
