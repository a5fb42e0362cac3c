#pragma once

#include "qortho/detail/zpoly.hpp"
#include "qortho/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qortho {

/// Degree reported for the zero polynomial.
inline constexpr long kZeroDegree = std::numeric_limits<long>::min();

/**
 * Dense polynomial in q with rational coefficients.
 *
 * Stored as content * primitive, where the primitive part lives in Z[q] with a
 * positive leading coefficient and the (signed) rational content carries
 * everything else. Two equal polynomials therefore have identical storage.
 */
class QPolynomial {
 public:
  QPolynomial() = default;

  QPolynomial(const RationalNumber& c) {  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) {
      content_ = c;
      prim_ = {Integer(1)};
    }
  }
  QPolynomial(long c) : QPolynomial(RationalNumber(c)) {}  // NOLINT
  QPolynomial(int c) : QPolynomial(RationalNumber(c)) {}   // NOLINT

  /// Ascending coefficients; trailing zeros are stripped.
  explicit QPolynomial(const std::vector<RationalNumber>& coeffs) {
    Integer lcm_den = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    detail::ZPoly z(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      z[i] = coeffs[i].get_num() * (lcm_den / coeffs[i].get_den());
    *this = from_integer(std::move(z), RationalNumber(Integer(1), lcm_den));
  }

  QPolynomial(std::initializer_list<long> coeffs) {
    detail::ZPoly z;
    for (long c : coeffs) z.emplace_back(c);
    *this = from_integer(std::move(z));
  }

  /// Builds scale * z; z need not be primitive.
  static QPolynomial from_integer(detail::ZPoly z, RationalNumber scale = 1) {
    detail::trim(z);
    QPolynomial p;
    if (z.empty() || sgn(scale) == 0) return p;
    Integer g = detail::content(z);
    if (sgn(z.back()) < 0) g = -g;
    if (g != 1)
      for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    p.content_ = scale * g;
    p.prim_ = std::move(z);
    return p;
  }

  /// q^k
  static QPolynomial monomial(std::size_t k, const RationalNumber& c = 1) {
    if (sgn(c) == 0) return {};
    detail::ZPoly z(k + 1);
    z[k] = 1;
    QPolynomial p;
    p.content_ = c;
    p.prim_ = std::move(z);
    return p;
  }

  static QPolynomial q() { return monomial(1); }

  bool is_zero() const { return prim_.empty(); }
  bool is_constant() const { return prim_.size() <= 1; }
  bool is_one() const { return prim_.size() == 1 && content_ == 1; }

  long degree() const { return is_zero() ? kZeroDegree : static_cast<long>(prim_.size()) - 1; }

  RationalNumber coefficient(std::size_t i) const {
    if (i >= prim_.size()) return 0;
    return content_ * RationalNumber(prim_[i]);
  }
  RationalNumber leading() const { return is_zero() ? RationalNumber(0) : coefficient(prim_.size() - 1); }

  std::vector<RationalNumber> coefficients() const {
    std::vector<RationalNumber> out(prim_.size());
    for (std::size_t i = 0; i < prim_.size(); ++i) out[i] = coefficient(i);
    return out;
  }

  const RationalNumber& content() const { return content_; }
  const detail::ZPoly& primitive_part() const { return prim_; }

  QPolynomial operator-() const {
    QPolynomial r = *this;
    r.content_ = -r.content_;
    return r;
  }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.prim_ == b.prim_) {
      QPolynomial r = a;
      r.content_ += b.content_;
      if (sgn(r.content_) == 0) return {};
      return r;
    }
    // (na/da) A + (nb/db) B = (na*db*A + nb*da*B) / (da*db)
    const Integer fa = a.content_.get_num() * b.content_.get_den();
    const Integer fb = b.content_.get_num() * a.content_.get_den();
    detail::ZPoly s(std::max(a.prim_.size(), b.prim_.size()));
    for (std::size_t i = 0; i < a.prim_.size(); ++i) s[i] = fa * a.prim_[i];
    for (std::size_t i = 0; i < b.prim_.size(); ++i)
      mpz_addmul(s[i].get_mpz_t(), fb.get_mpz_t(), b.prim_[i].get_mpz_t());
    return from_integer(std::move(s),
                        RationalNumber(Integer(1), a.content_.get_den() * b.content_.get_den()));
  }
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-b); }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPolynomial r;
    r.content_ = a.content_ * b.content_;
    r.prim_ = detail::mul(a.prim_, b.prim_);  // Gauss: primitive times primitive
    return r;
  }

  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
  QPolynomial& operator-=(const QPolynomial& o) { return *this = *this - o; }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.prim_ == b.prim_ && (a.is_zero() || a.content_ == b.content_);
  }

  /// Multiplication by q^k.
  QPolynomial shifted(std::size_t k) const {
    QPolynomial r = *this;
    r.prim_ = detail::shift(prim_, k);
    return r;
  }

  /// Largest k with q^k dividing this (0 for the zero polynomial).
  std::size_t valuation() const { return detail::valuation(prim_); }

  RationalNumber evaluate(const RationalNumber& point) const {
    if (is_zero()) return 0;
    // Homogenized Horner over the integers: value = content * N / den^d.
    const Integer& p = point.get_num();
    const Integer& d = point.get_den();
    Integer acc = prim_.back();
    Integer dpow = 1;
    for (std::size_t i = prim_.size() - 1; i-- > 0;) {
      dpow *= d;
      acc = acc * p + prim_[i] * dpow;
    }
    RationalNumber r(acc, dpow);
    r.canonicalize();
    return content_ * r;
  }

  /// q^deg * p(1/q).
  QPolynomial reversed() const {
    if (is_zero()) return {};
    QPolynomial r;
    r.content_ = content_;
    r.prim_.assign(prim_.rbegin(), prim_.rend());
    detail::trim(r.prim_);
    // Leading coefficient may have turned negative.
    return from_integer(std::move(r.prim_), content_);
  }

  /// Scales to leading coefficient one. Zero stays zero.
  QPolynomial monic() const {
    if (is_zero()) return {};
    QPolynomial r = *this;
    r.content_ = RationalNumber(Integer(1), prim_.back());
    r.content_.canonicalize();
    return r;
  }

 private:
  RationalNumber content_ = 0;
  detail::ZPoly prim_;
};

/// Exact quotient; throws std::logic_error if b does not divide a.
inline QPolynomial divexact(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  auto z = detail::divexact(a.primitive_part(), b.primitive_part());
  return QPolynomial::from_integer(std::move(z), a.content() / b.content());
}

/// Euclidean division over Q: a = quotient * b + remainder, deg remainder < deg b.
inline std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<RationalNumber> rem = a.coefficients();
  const std::vector<RationalNumber> div = b.coefficients();
  const std::size_t db = div.size() - 1;
  if (rem.size() < div.size()) return {QPolynomial{}, a};
  std::vector<RationalNumber> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (sgn(rem[i]) == 0) continue;
    const RationalNumber f = rem[i] / div.back();
    quot[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * div[j];
  }
  rem.resize(db);
  return {QPolynomial(quot), QPolynomial(rem)};
}

/// Monic gcd over Q; gcd(0, 0) = 0.
inline QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return QPolynomial::from_integer(detail::gcd(a.primitive_part(), b.primitive_part())).monic();
}

}  // namespace qortho
