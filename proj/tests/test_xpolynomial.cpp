#include "qortho/xpolynomial.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace qortho;

namespace {

QRational rat(long n, long d) { return QRational(RationalNumber(n, d)); }

}  // namespace

TEST(XPolynomial, Basics) {
  const XPolynomial p = XPolynomial::x() * XPolynomial::x() - XPolynomial(1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_monic());
  EXPECT_EQ(p[0], QRational(-1));
  EXPECT_EQ(p[7], QRational());
  EXPECT_EQ(XPolynomial(QRational()).degree(), kZeroDegree);
  EXPECT_EQ(p.shifted(1), XPolynomial::monomial(3) - XPolynomial::x());
  EXPECT_EQ((XPolynomial{QRational(1), QRational(1)}) * (XPolynomial{QRational(-1), QRational(1)}), p);
}

TEST(XPolynomial, EvaluateAtPoint) {
  const XPolynomial p{QRational(QPolynomial{0, 1}), QRational(QPolynomial{1, 1})};
  EXPECT_EQ(evaluate_at(p, 2), (XPolynomial{QRational(2), QRational(3)}));
}

TEST(MomentSequence, FunctionalIsLinear) {
  const MomentSequence L([](std::size_t n) { return QRational(static_cast<long>(n + 1)); });
  const XPolynomial a{QRational(1), QRational(2)}, b = XPolynomial::monomial(2, 3);
  EXPECT_EQ(apply_functional(L, a), QRational(1 + 4));
  EXPECT_EQ(apply_functional(L, a + b), apply_functional(L, a) + apply_functional(L, b));
  EXPECT_EQ(apply_functional(L, b.scaled(rat(1, 3))), QRational(3));
}

TEST(MomentSequence, AerateAndSpecialize) {
  const MomentSequence L([](std::size_t n) { return QRational(QPolynomial::monomial(n)); });
  const MomentSequence A = aerate(L);
  EXPECT_EQ(A(4), QRational(QPolynomial::monomial(2)));
  EXPECT_EQ(A(3), QRational());
  EXPECT_EQ(specialize(L, 2)(3), QRational(8));
}

TEST(MomentSequence, SharedCacheAcrossThreads) {
  const MomentSequence L([](std::size_t n) { return QRational(static_cast<long>(n * n)); });
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&] {
      for (std::size_t n = 0; n < 50; ++n) EXPECT_EQ(L(n), QRational(static_cast<long>(n * n)));
    });
  for (auto& t : threads) t.join();
}

TEST(XPolynomial, EvenPartCompress) {
  // x^4 - 3x^2 + 2 -> x^2 - 3x + 2
  const XPolynomial P{QRational(2), QRational(), QRational(-3), QRational(), QRational(1)};
  EXPECT_EQ(even_part_compress(P), (XPolynomial{QRational(2), QRational(-3), QRational(1)}));
  EXPECT_THROW(even_part_compress(XPolynomial::x()), std::domain_error);
}
