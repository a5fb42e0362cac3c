#include "qortho/format.hpp"
#include "qortho/serialize.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qortho;

TEST(Serialize, Shapes) {
  EXPECT_EQ(to_json(RationalNumber(-3, 6)), "-1/2");
  EXPECT_EQ(to_json(QPolynomial{1, 0, 2}).dump(), R"(["1/1","0/1","2/1"])");
  const QRational r = QRational::normalize(QPolynomial{1}, QPolynomial{1, 1});
  EXPECT_EQ(to_json(r).dump(), R"({"den":["1/1","1/1"],"num":["1/1"]})");
  EXPECT_EQ(to_json(QPolynomial()).dump(), "[]");
}

TEST(Serialize, RoundTrip) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const QRational a = rnd::random_qrat(rng);
    EXPECT_EQ(qrat_from_json(nlohmann::json::parse(to_json(a).dump())), a);
    const XPolynomial p{a, rnd::random_qrat(rng), QRational(1)};
    EXPECT_EQ(xpoly_from_json(nlohmann::json::parse(to_json(p).dump())), p);
  }
  const QPolynomial huge = QPolynomial::from_integer({Integer("123456789012345678901234567890"), Integer(-1)});
  EXPECT_EQ(qpoly_from_json(to_json(huge)), huge);
  const std::vector<QRational> v{QRational(), QRational(RationalNumber(7, 3))};
  EXPECT_EQ(qrat_vector_from_json(to_json(v)), v);
}

TEST(Serialize, RejectsBadInput) {
  EXPECT_THROW(rational_from_json(1.5), std::invalid_argument);
  EXPECT_THROW(qpoly_from_json(nlohmann::json::object()), std::invalid_argument);
  EXPECT_THROW(qrat_from_json(nlohmann::json::array()), std::invalid_argument);
  EXPECT_THROW(qrat_from_json(nlohmann::json{{"num", {"1/1"}}, {"den", nlohmann::json::array()}}),
               std::domain_error);
}

TEST(Format, Text) {
  EXPECT_EQ(format(QPolynomial{1, 1, 2}), "1 + q + 2q^2");
  EXPECT_EQ(format(QPolynomial{0, -1}), "-q");
  EXPECT_EQ(format(QPolynomial()), "0");
  EXPECT_EQ(format(QPolynomial(RationalNumber(1, 2))), "1/2");
  EXPECT_EQ(format(QRational::normalize(QPolynomial{1}, QPolynomial{1, 1})), "1/(1 + q)");
  const XPolynomial p{QRational(2), QRational(-4), QRational(1)};
  EXPECT_EQ(format(p), "x^2 - 4x + 2");
  EXPECT_EQ(format(XPolynomial{QRational(), QRational(QPolynomial{1, 1})}), "(1 + q)x");
}

TEST(Format, Latex) {
  EXPECT_EQ(format(QPolynomial{1, 0, 3}, Style::latex), "1 + 3q^{2}");
  EXPECT_EQ(format(QRational(RationalNumber(-1, 2)), Style::latex), "-\\frac{1}{2}");
  EXPECT_EQ(format(QRational::normalize(QPolynomial{1}, QPolynomial{1, 1}), Style::latex), "\\frac{1}{1 + q}");
}
