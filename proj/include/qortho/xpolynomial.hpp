#pragma once

#include "qortho/qrational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qortho {

/// Polynomial in x over Q(q); coefficient of x^k at position k.
class XPolynomial {
 public:
  XPolynomial() = default;
  XPolynomial(const QRational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  XPolynomial(long c) : XPolynomial(QRational(c)) {}  // NOLINT
  XPolynomial(int c) : XPolynomial(QRational(c)) {}   // NOLINT
  explicit XPolynomial(std::vector<QRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  XPolynomial(std::initializer_list<QRational> coeffs) : coeffs_(coeffs) { trim(); }

  /// c x^k
  static XPolynomial monomial(std::size_t k, const QRational& c = 1) {
    if (c.is_zero()) return {};
    std::vector<QRational> v(k + 1);
    v[k] = c;
    return XPolynomial(std::move(v));
  }
  static XPolynomial x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return is_zero() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

  const QRational& operator[](std::size_t k) const {
    static const QRational zero;
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }
  const std::vector<QRational>& coefficients() const { return coeffs_; }
  const QRational& leading() const { return (*this)[coeffs_.empty() ? 0 : coeffs_.size() - 1]; }

  XPolynomial operator-() const {
    XPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend XPolynomial operator+(const XPolynomial& a, const XPolynomial& b) {
    std::vector<QRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return XPolynomial(std::move(v));
  }
  friend XPolynomial operator-(const XPolynomial& a, const XPolynomial& b) {
    std::vector<QRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return XPolynomial(std::move(v));
  }
  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<QRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (!b.coeffs_[j].is_zero()) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return XPolynomial(std::move(v));
  }
  friend XPolynomial operator*(const QRational& s, const XPolynomial& p) { return p.scaled(s); }

  XPolynomial& operator+=(const XPolynomial& o) { return *this = *this + o; }
  XPolynomial& operator-=(const XPolynomial& o) { return *this = *this - o; }
  XPolynomial& operator*=(const XPolynomial& o) { return *this = *this * o; }

  XPolynomial scaled(const QRational& s) const {
    if (s.is_zero()) return {};
    XPolynomial r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  /// Multiplication by x^k.
  XPolynomial shifted(std::size_t k = 1) const {
    if (is_zero() || k == 0) return *this;
    std::vector<QRational> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return XPolynomial(std::move(v));
  }

  /// Applies f to every coefficient.
  template <typename F>
  XPolynomial map_coefficients(F&& f) const {
    std::vector<QRational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return XPolynomial(std::move(v));
  }

  friend bool operator==(const XPolynomial& a, const XPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<QRational> coeffs_;
};

/// Coefficientwise evaluation at q = point.
inline XPolynomial evaluate_at(const XPolynomial& p, const RationalNumber& point) {
  return p.map_coefficients([&](const QRational& c) { return QRational(c.evaluate(point)); });
}

/**
 * Moment sequence n -> L(x^n) with a lazily filled, shared prefix cache.
 *
 * Copies share the cache; access is serialized by a mutex so a sequence may be
 * used from several threads.
 */
class MomentSequence {
 public:
  using Evaluator = std::function<QRational(std::size_t)>;

  MomentSequence() : MomentSequence([](std::size_t n) { return QRational(n == 0 ? 1 : 0); }) {}
  explicit MomentSequence(Evaluator eval) : state_(std::make_shared<State>()) {
    state_->eval = std::move(eval);
  }

  QRational operator()(std::size_t n) const {
    std::lock_guard lock(state_->mu);
    auto& cache = state_->cache;
    while (cache.size() <= n) cache.push_back(state_->eval(cache.size()));
    return cache[n];
  }

 private:
  struct State {
    Evaluator eval;
    std::vector<QRational> cache;
    std::mutex mu;
  };
  std::shared_ptr<State> state_;
};

/// Moments of the aerated sequence: A(2n) = a(n), A(2n+1) = 0.
inline MomentSequence aerate(const MomentSequence& L) {
  return MomentSequence([L](std::size_t n) { return n % 2 ? QRational() : L(n / 2); });
}

/// The moment sequence with every moment evaluated at q = point.
inline MomentSequence specialize(const MomentSequence& L, const RationalNumber& point) {
  return MomentSequence([L, point](std::size_t n) { return QRational(L(n).evaluate(point)); });
}

/// L(p) = sum_k p_k L(x^k).
inline QRational apply_functional(const MomentSequence& L, const XPolynomial& p) {
  QRational acc;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) acc += c[k] * L(k);
  return acc;
}

/// Coefficient of x^k in the result is the coefficient of x^{2k} in P.
/// Throws std::domain_error if P has a nonzero odd coefficient.
inline XPolynomial even_part_compress(const XPolynomial& P) {
  const auto& c = P.coefficients();
  std::vector<QRational> v((c.size() + 1) / 2);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2) {
      if (!c[k].is_zero()) throw std::domain_error("polynomial is not even");
    } else {
      v[k / 2] = c[k];
    }
  }
  return XPolynomial(std::move(v));
}

}  // namespace qortho
