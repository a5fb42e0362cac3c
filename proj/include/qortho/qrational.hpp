#pragma once

#include "qortho/qpolynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qortho {

/// Raised when a rational function is evaluated at one of its poles.
class PoleError : public std::domain_error {
 public:
  PoleError() : std::domain_error("pole at evaluation point") {}
};

/**
 * Element of Q(q) in canonical form: gcd(num, den) = 1 and den monic.
 *
 * Canonical form makes operator== a plain field comparison. Arithmetic keeps
 * intermediate gcds small by cancelling cross factors before multiplying.
 */
class QRational {
 public:
  QRational() : den_(1) {}
  QRational(const QPolynomial& p) : num_(p), den_(1) {}           // NOLINT
  QRational(const RationalNumber& c) : num_(c), den_(1) {}        // NOLINT
  QRational(long c) : num_(RationalNumber(c)), den_(1) {}         // NOLINT
  QRational(int c) : num_(RationalNumber(c)), den_(1) {}          // NOLINT

  /// Reduces num/den. Throws std::domain_error on a zero denominator.
  static QRational normalize(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return {};
    const QPolynomial g = gcd(num, den);
    if (g.is_one()) return from_coprime(num, den);
    return from_coprime(divexact(num, g), divexact(den, g));
  }

  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  QRational operator-() const {
    QRational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend QRational operator+(const QRational& a, const QRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return QRational(a.num_ + b.num_);
    if (a.den_ == b.den_) return normalize(a.num_ + b.num_, a.den_);
    if (a.den_.is_one()) return from_coprime(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return from_coprime(a.num_ + b.num_ * a.den_, a.den_);
    // Henrici: only the common part of the denominators can cancel.
    const QPolynomial g = gcd(a.den_, b.den_);
    if (g.is_one())
      return from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const QPolynomial bd = divexact(b.den_, g);
    const QPolynomial ad = divexact(a.den_, g);
    const QPolynomial n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero()) return {};
    const QPolynomial h = gcd(n, g);
    if (h.is_one()) return from_coprime(n, a.den_ * bd);
    return from_coprime(divexact(n, h), divexact(a.den_, h) * bd);
  }
  friend QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

  friend QRational operator*(const QRational& a, const QRational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return QRational(a.num_ * b.num_);
    const QPolynomial g1 = gcd(a.num_, b.den_);
    const QPolynomial g2 = gcd(b.num_, a.den_);
    const QPolynomial an = g1.is_one() ? a.num_ : divexact(a.num_, g1);
    const QPolynomial bd = g1.is_one() ? b.den_ : divexact(b.den_, g1);
    const QPolynomial bn = g2.is_one() ? b.num_ : divexact(b.num_, g2);
    const QPolynomial ad = g2.is_one() ? a.den_ : divexact(a.den_, g2);
    return from_coprime(an * bn, ad * bd);
  }

  QRational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero polynomial");
    return from_coprime(den_, num_);
  }

  friend QRational operator/(const QRational& a, const QRational& b) { return a * b.inverse(); }

  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  QRational& operator/=(const QRational& o) { return *this = *this / o; }

  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at a rational point; throws PoleError at a genuine pole.
  RationalNumber evaluate(const RationalNumber& point) const {
    const RationalNumber d = den_.evaluate(point);
    if (sgn(d) == 0) throw PoleError();
    return num_.evaluate(point) / d;
  }

  /// The image under the field automorphism q -> 1/q.
  QRational substitute_reciprocal() const {
    if (is_zero()) return {};
    // N(1/q)/D(1/q) = rev(N) q^{deg D} / (rev(D) q^{deg N})
    const auto dn = static_cast<std::size_t>(num_.degree());
    const auto dd = static_cast<std::size_t>(den_.degree());
    QPolynomial n = num_.reversed(), d = den_.reversed();
    if (dd >= dn)
      n = n.shifted(dd - dn);
    else
      d = d.shifted(dn - dd);
    return normalize(n, d);
  }

  RationalNumber constant_value() const {
    if (!is_constant()) throw std::logic_error("QRational is not a constant");
    return num_.coefficient(0);
  }

 private:
  QRational(QPolynomial n, QPolynomial d) : num_(std::move(n)), den_(std::move(d)) {}

  static QRational from_coprime(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return {};
    const RationalNumber lc = den.leading();
    if (lc == 1) return QRational(num, den);
    const RationalNumber inv = 1 / lc;
    return QRational(num * QPolynomial(inv), den * QPolynomial(inv));
  }

  QPolynomial num_;
  QPolynomial den_;
};

inline QRational qrat_normalize(const QPolynomial& num, const QPolynomial& den) {
  return QRational::normalize(num, den);
}

inline QRational pow(const QRational& base, unsigned e) {
  QRational r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

}  // namespace qortho
