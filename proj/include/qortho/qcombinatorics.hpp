#pragma once

// q-analogs of the classical combinatorial quantities. Everything here is a
// polynomial in q with integer coefficients.

#include "qortho/qpolynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qortho {

/// The base q^r of a q-analog.
class QBase {
 public:
  constexpr QBase() = default;
  explicit constexpr QBase(unsigned exponent) : exponent_(exponent) {
    if (exponent == 0) throw std::invalid_argument("QBase exponent must be >= 1");
  }
  constexpr unsigned exponent() const { return exponent_; }

 private:
  unsigned exponent_ = 1;
};

enum class Parity { odd, even };

/// [n]_{q^r} = 1 + q^r + ... + q^{r(n-1)}; zero for n = 0.
inline QPolynomial q_bracket(long n, QBase base = {}) {
  if (n < 0) throw std::invalid_argument("q_bracket: negative argument");
  if (n == 0) return {};
  const std::size_t r = base.exponent();
  detail::ZPoly z(r * static_cast<std::size_t>(n - 1) + 1);
  for (long j = 0; j < n; ++j) z[r * static_cast<std::size_t>(j)] = 1;
  return QPolynomial::from_integer(std::move(z));
}

inline QPolynomial q_factorial(long n, QBase base = {}) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPolynomial r = 1;
  for (long j = 2; j <= n; ++j) r *= q_bracket(j, base);
  return r;
}

/// Gaussian binomial by the Pascal rule [n,k] = [n-1,k-1] + q^{rk} [n-1,k].
/// Zero outside 0 <= k <= n.
inline QPolynomial q_binomial(long n, long k, QBase base = {}) {
  if (n < 0 || k < 0 || k > n) return {};
  if (k > n - k) k = n - k;
  const std::size_t r = base.exponent();
  // row[j] holds [i, j] while sweeping i up to n.
  std::vector<detail::ZPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = {1};
  for (long i = 1; i <= n; ++i) {
    for (long j = std::min(i, k); j >= 1; --j) {
      const auto ju = static_cast<std::size_t>(j);
      row[ju] = detail::add(row[ju - 1], detail::shift(row[ju], r * ju));
    }
  }
  return QPolynomial::from_integer(row[static_cast<std::size_t>(k)]);
}

/// prod_{j=0}^{length-1} (1 - sign q^{power+j}); sign is +1 or -1.
inline QPolynomial q_pochhammer_signed(int sign, std::size_t power, std::size_t length) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("q_pochhammer_signed: sign must be +-1");
  QPolynomial r = 1;
  for (std::size_t j = 0; j < length; ++j)
    r *= QPolynomial(1) - QPolynomial::monomial(power + j, sign);
  return r;
}

/// Odd: [1][3]...[2n-1]. Even: [2][4]...[2n]. Both are 1 for n = 0.
inline QPolynomial q_double_factorial(long n, Parity parity) {
  if (n < 0) throw std::invalid_argument("q_double_factorial: negative index");
  QPolynomial r = 1;
  for (long j = 1; j <= n; ++j) r *= q_bracket(parity == Parity::odd ? 2 * j - 1 : 2 * j);
  return r;
}

/// mf(n, step) = [n] mf(n - step, step), with mf = 1 for n <= 1.
inline QPolynomial q_multifactorial(long n, long step) {
  if (step < 1) throw std::invalid_argument("q_multifactorial: step must be >= 1");
  QPolynomial r = 1;
  for (; n > 1; n -= step) r *= q_bracket(n);
  return r;
}

/// q^{binom(n,2)}
inline QPolynomial q_power_binom2(long n) {
  if (n < 0) throw std::invalid_argument("q_power_binom2: negative argument");
  return QPolynomial::monomial(static_cast<std::size_t>(n * (n - 1) / 2));
}

inline constexpr long binom2(long n) { return n * (n - 1) / 2; }

}  // namespace qortho
