#include "qortho/families.hpp"

#include <gtest/gtest.h>

using namespace qortho;

namespace {

MomentSequence at_one(const FamilyId& id) { return specialize(make_family(id).moments, 1); }

XPolynomial xp(std::initializer_list<long> c) {
  std::vector<QRational> v;
  for (long x : c) v.emplace_back(x);
  return XPolynomial(std::move(v));
}

}  // namespace

TEST(Hankel, DirectSmallCases) {
  const MomentSequence L = at_one(FamilyId::q_factorial(0));
  EXPECT_EQ(hankel_direct(L, 0), QRational(1));
  EXPECT_EQ(hankel_direct(L, 1), QRational(1));
  EXPECT_EQ(hankel_direct(L, 3), QRational(4));
  const MomentSequence F = at_one(FamilyId::fibonacci());
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(hankel_direct(F, n), QRational(1)) << n;
}

TEST(Hankel, ProductMatchesDirect) {
  const MomentSequence L = at_one(FamilyId::q_factorial(0));
  const RecurrenceTable t = stieltjes(L, 3);
  EXPECT_EQ(hankel_product(t, 1), QRational(1));
  EXPECT_EQ(hankel_product(t, 3), QRational(4));
  const MomentSequence A = make_family(FamilyId::andrews_catalan()).moments;
  const RecurrenceTable ta = stieltjes(A, 5);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(hankel_product(ta, n), hankel_direct(A, n)) << n;
  EXPECT_THROW(hankel_product(t, 6), std::out_of_range);
}

TEST(OrthopolyDet, SmallCases) {
  const MomentSequence L = at_one(FamilyId::q_factorial(0));
  EXPECT_EQ(orthopoly_det(L, 0), XPolynomial(1));
  EXPECT_EQ(orthopoly_det(L, 1), xp({-1, 1}));
  EXPECT_EQ(orthopoly_det(L, 2), xp({2, -4, 1}));
  const MomentSequence G = make_family(FamilyId::geometric()).moments;
  const XPolynomial p2 = orthopoly_det(G, 2);
  EXPECT_EQ(p2.degree(), 2);
  EXPECT_TRUE(p2.is_monic());
  EXPECT_TRUE(apply_functional(G, p2).is_zero());
  EXPECT_TRUE(apply_functional(G, p2.shifted(1)).is_zero());
}

TEST(OrthopolyDet, DetectsNonQuasiDefinite) {
  // geometric-q at q = 1 has all moments 1, so d_2 = 0.
  const MomentSequence L = at_one(FamilyId::geometric());
  EXPECT_EQ(orthopoly_det(L, 1), xp({-1, 1}));
  try {
    orthopoly_det(L, 3);
    FAIL() << "expected QuasiDefiniteError";
  } catch (const QuasiDefiniteError& e) {
    EXPECT_EQ(e.level(), 2u);
    EXPECT_STREQ(e.what(), "moment sequence not quasi-definite at level 2");
  }
  EXPECT_THROW(stieltjes(L, 3), QuasiDefiniteError);
}

TEST(Stieltjes, KnownCoefficients) {
  const RecurrenceTable f = stieltjes(at_one(FamilyId::q_factorial(0)), 4);
  EXPECT_EQ(f.s, (std::vector<QRational>{1, 3, 5, 7}));
  EXPECT_EQ(f.t, (std::vector<QRational>{1, 4, 9}));
  const RecurrenceTable g = stieltjes(make_family(FamilyId::geometric()).moments, 2);
  EXPECT_EQ(g.t[0], QRational(QPolynomial{-1, 1}));
  const RecurrenceTable m = stieltjes(at_one(FamilyId::multifactorial(2, 1)), 2);
  EXPECT_EQ(m.s[0], QRational(3));
  EXPECT_EQ(m.t[0], QRational(6));
  for (std::size_t k = 0; k + 1 < f.norms.size(); ++k) EXPECT_EQ(f.t[k], f.norms[k + 1] / f.norms[k]);
}

TEST(Recurrence, PolynomialsFromTable) {
  const RecurrenceTable f = stieltjes(at_one(FamilyId::q_factorial(0)), 2);
  EXPECT_EQ(orthopoly_recur(f, 0), XPolynomial(1));
  EXPECT_EQ(orthopoly_recur(f, 2), xp({2, -4, 1}));
  EXPECT_THROW(orthopoly_recur(f, 3), std::out_of_range);
  // Andrews q-Catalan aerated at q = 1: P_2 = x^2 - 1/4.
  const RecurrenceTable a = stieltjes(specialize(aerated_moments(FamilyId::andrews_catalan()), 1), 2);
  EXPECT_EQ(orthopoly_recur(a, 2), (XPolynomial{QRational(RationalNumber(-1, 4)), QRational(), QRational(1)}));
}

TEST(Triangle, Recurrence) {
  const FamilyId df = FamilyId::double_factorial();
  const ExpansionTriangle t = expansion_triangle(stieltjes(at_one(df), 3), 3);
  EXPECT_EQ(t(0, 0), QRational(1));
  EXPECT_EQ(t.row(2), (std::vector<QRational>{3, 6, 1}));
  EXPECT_EQ(t(2, 5), QRational());
  const MomentSequence L = make_family(FamilyId::q_factorial(1)).moments;
  const ExpansionTriangle u = expansion_triangle(stieltjes(L, 6), 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(u(n, 0), L(n));
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(u(n, k), *closed_triangle(FamilyId::q_factorial(1), n, k));
  }
}

TEST(Deaerate, Formulas) {
  const auto [s0, t0] = deaerate(std::vector<QRational>(4), 2);
  EXPECT_EQ(s0, std::vector<QRational>(2));
  EXPECT_EQ(t0, std::vector<QRational>(2));
  // T from factorial moments at q = 1: 1, 1, 2, 2, 3, 3, ...
  std::vector<QRational> T;
  for (long k = 0; k < 8; ++k) T.emplace_back(k / 2 + 1);
  const auto [s, t] = deaerate(T, 4);
  EXPECT_EQ(s, (std::vector<QRational>{1, 3, 5, 7}));
  EXPECT_EQ(t, (std::vector<QRational>{1, 4, 9, 16}));
  EXPECT_THROW(deaerate(T, 5), std::out_of_range);
}

TEST(Aerated, Polynomials) {
  const FamilyId df = FamilyId::double_factorial();
  EXPECT_EQ(aerated_orthopoly(df, 0), XPolynomial(1));
  EXPECT_EQ(aerated_orthopoly(df, 1), XPolynomial::x());
  EXPECT_EQ(evaluate_at(aerated_orthopoly(df, 4), 1), xp({3, 0, -6, 0, 1}));
  const QRational T0 = QRational::normalize(1, QPolynomial{1, 1, 1, 1});
  EXPECT_EQ(aerated_orthopoly(FamilyId::andrews_catalan(), 2), (XPolynomial{-T0, QRational(), QRational(1)}));
  // Stieltjes on the aerated fibonacci functional moments hits a zero Hankel
  // determinant, so that path is refused.
  EXPECT_THROW(symmetric_T(aerated_moments(FamilyId::fibonacci()), 3), QuasiDefiniteError);
}

TEST(Aerated, NonSymmetricRejected) {
  EXPECT_THROW(symmetric_T(at_one(FamilyId::q_factorial(0)), 2), std::domain_error);
}
