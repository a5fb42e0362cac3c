#include "qortho/qpolynomial.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qortho;

TEST(QPolynomial, CanonicalStorage) {
  const QPolynomial a(std::vector<RationalNumber>{RationalNumber(2, 3), RationalNumber(4, 3), RationalNumber(0), RationalNumber(0)});
  const QPolynomial b = QPolynomial{1, 2} * QPolynomial(RationalNumber(2, 3));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(a.content(), RationalNumber(2, 3));
  EXPECT_EQ((QPolynomial{-2, -4}).content(), -2);
  EXPECT_TRUE(QPolynomial(std::vector<RationalNumber>(2)).is_zero());
  EXPECT_EQ(QPolynomial().degree(), kZeroDegree);
}

TEST(QPolynomial, Arithmetic) {
  const QPolynomial p{1, 1};
  EXPECT_EQ(p * p, (QPolynomial{1, 2, 1}));
  EXPECT_EQ(p - p, QPolynomial());
  EXPECT_EQ(QPolynomial::q().shifted(2), QPolynomial::monomial(3));
  EXPECT_EQ((QPolynomial{0, 0, 3, 1}).valuation(), 2u);
  EXPECT_EQ((QPolynomial{1, 2, 3}).reversed(), (QPolynomial{3, 2, 1}));
  EXPECT_EQ((QPolynomial{2, 4}).monic().leading(), 1);
}

TEST(QPolynomial, Evaluate) {
  const QPolynomial p{1, -3, 2};
  EXPECT_EQ(p.evaluate(1), 0);
  EXPECT_EQ(p.evaluate(RationalNumber(1, 2)), 0);
  EXPECT_EQ(p.evaluate(RationalNumber(-2, 3)), RationalNumber(1) + 2 + RationalNumber(8, 9));
}

TEST(QPolynomial, DivisionAndGcd) {
  const QPolynomial a = QPolynomial{1, 1} * QPolynomial{1, 0, 1};
  EXPECT_EQ(divexact(a, QPolynomial{1, 1}), (QPolynomial{1, 0, 1}));
  const auto [quo, rem] = divmod(QPolynomial{1, 0, 1}, QPolynomial{1, 1});
  EXPECT_EQ(quo, (QPolynomial{-1, 1}));
  EXPECT_EQ(rem, QPolynomial(2));
  EXPECT_EQ(gcd(a, QPolynomial{-1, 0, 1}), (QPolynomial{1, 1}));
  EXPECT_EQ(gcd(QPolynomial::monomial(3), QPolynomial::monomial(5, 7)), QPolynomial::monomial(3));
  EXPECT_EQ(gcd(QPolynomial(), QPolynomial{2, 4}), QPolynomial(std::vector<RationalNumber>{RationalNumber(1, 2), RationalNumber(1)}));
}

TEST(QPolynomial, KroneckerMatchesSchoolbook) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-1000000, 1000000);
  for (int trial = 0; trial < 20; ++trial) {
    detail::ZPoly a(40), b(35);
    for (auto& x : a) x = Integer(c(rng)) * c(rng);
    for (auto& x : b) x = c(rng);
    EXPECT_EQ(detail::mul(a, b), detail::mul_schoolbook(a, b));
  }
}

TEST(QPolynomial, HeuristicGcdAgreesWithPrs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const QPolynomial g = rnd::random_nonzero_qpoly(rng, 3);
    const QPolynomial a = g * rnd::random_nonzero_qpoly(rng, 4);
    const QPolynomial b = g * rnd::random_nonzero_qpoly(rng, 4);
    const QPolynomial expect = QPolynomial::from_integer(
        detail::gcd_prs(a.primitive_part(), b.primitive_part())).monic();
    EXPECT_EQ(gcd(a, b), expect);
    EXPECT_TRUE(divmod(a, gcd(a, b)).second.is_zero());
  }
}

TEST(QPolynomial, RingAxioms) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = rnd::random_qpoly(rng), b = rnd::random_qpoly(rng), c = rnd::random_qpoly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const RationalNumber x(trial - 25, 7);
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
  }
}

TEST(QPolynomial, DivexactRejectsNonDivisor) {
  EXPECT_THROW(divexact(QPolynomial{1, 0, 1}, QPolynomial{1, 1}), std::logic_error);
  EXPECT_THROW(divmod(QPolynomial{1}, QPolynomial()), std::domain_error);
}
