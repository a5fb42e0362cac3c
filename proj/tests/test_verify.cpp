#include "qortho/verify.hpp"

#include <gtest/gtest.h>

using namespace qortho;

namespace {

bool has_check(const VerificationReport& r, const std::string& check) {
  for (const auto& e : r.entries())
    if (e.check == check) return true;
  return false;
}

}  // namespace

TEST(Verify, QFactorialAllMatch) {
  const VerificationReport r = verify_family(FamilyId::q_factorial(0), 6);
  EXPECT_TRUE(r.all_match());
  EXPECT_GT(r.entries().size(), 100u);
  for (const char* c : {"poly.det_vs_recurrence", "poly.det_vs_closed", "orthogonality", "hankel.two_path",
                        "triangle.closed", "recurrence.closed_st", "aerated.closed_T", "aerated.compress",
                        "reciprocal.poly", "q1.closed_poly", "q1.triangle"})
    EXPECT_TRUE(has_check(r, c)) << c;
}

TEST(Verify, AndrewsCatalanAllMatch) {
  const VerificationReport r = verify_family(FamilyId::andrews_catalan(), 6);
  EXPECT_TRUE(r.all_match());
  EXPECT_TRUE(has_check(r, "aerated.det_vs_closed"));
  EXPECT_TRUE(has_check(r, "rescaled.U"));
}

TEST(Verify, FunctionalFamilies) {
  for (const auto& id : {FamilyId::fibonacci(), FamilyId::lucas()}) {
    const VerificationReport r = verify_family(id, 5);
    EXPECT_TRUE(r.all_match()) << id.name();
    EXPECT_TRUE(has_check(r, "functional.moments"));
    EXPECT_FALSE(has_check(r, "aerated.s_zero"));
  }
}

TEST(Verify, CorruptedClosedFormIsReported) {
  VerifyOptions opt;
  opt.closed_override = [](std::size_t n) -> std::optional<XPolynomial> {
    XPolynomial p = cf_qlaguerre(static_cast<long>(n), 1);
    if (n == 2) p += XPolynomial(QRational(QPolynomial::q()));
    return p;
  };
  const VerificationReport r = verify_family(FamilyId::q_factorial(1), 4, opt);
  EXPECT_FALSE(r.all_match());
  bool found = false;
  for (const auto& e : r.entries()) {
    if (e.status != CheckStatus::mismatch) continue;
    EXPECT_EQ(e.family, "q-factorial:m=1");
    EXPECT_EQ(e.n, 2u);
    EXPECT_FALSE(e.left.is_null());
    EXPECT_FALSE(e.right.is_null());
    EXPECT_NE(e.left, e.right);
    found = found || e.check == "poly.det_vs_closed";
  }
  EXPECT_TRUE(found);
}

TEST(Verify, ReportIsSorted) {
  VerificationReport r;
  r.add({"b", 1, "x", CheckStatus::match, {}, {}});
  r.add({"a", 2, "y", CheckStatus::mismatch, "l", "r"});
  r.add({"a", 2, "a", CheckStatus::skipped, {}, {}});
  r.add({"a", 0, "z", CheckStatus::match, {}, {}});
  r.sort();
  EXPECT_EQ(r.entries()[0].n, 0u);
  EXPECT_EQ(r.entries()[1].check, "a");
  EXPECT_EQ(r.entries()[2].check, "y");
  EXPECT_EQ(r.entries()[3].family, "b");
  const auto j = r.to_json();
  EXPECT_EQ(j["mismatches"], 1);
  EXPECT_EQ(j["skipped"], 1);
  EXPECT_EQ(j["entries"][2]["left"], "l");
  EXPECT_FALSE(j["entries"][0].contains("left"));
}

TEST(Verify, Identities) {
  const VerificationReport r = verify_identities(10);
  EXPECT_TRUE(r.all_match());
  for (const char* c : {"rothe", "q-catalan.andrews", "q-central-binomial.product", "binomial.double_factorial"})
    EXPECT_TRUE(has_check(r, c)) << c;
}

TEST(Verify, AllIsDeterministic) {
  const VerificationReport a = verify_all(3), b = verify_all(3);
  ASSERT_EQ(a.entries().size(), b.entries().size());
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_TRUE(a.all_match());
}
