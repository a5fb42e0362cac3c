#pragma once

// Explicit polynomial families and q-series identities.
//
// Exponents that are hard to read off the printed formulas were pinned by
// comparing against the determinant oracle for n <= 4 and re-checked to n = 8
// (see tests/closed_forms_test.cpp, ExponentResolution.*).

#include "qortho/qcombinatorics.hpp"
#include "qortho/xpolynomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qortho {

namespace detail {

inline QRational signed_q_power(long k, long e) {
  // (-1)^k q^e, e may be negative.
  QRational r = e >= 0 ? QRational(QPolynomial::monomial(static_cast<std::size_t>(e)))
                       : QRational(QPolynomial::monomial(static_cast<std::size_t>(-e))).inverse();
  return k % 2 ? -r : r;
}

// a(n)/a(n-k) for a(n) = prod_{j=1}^n [r j + m], i.e. prod_{j=n-k+1}^{n} [rj+m].
inline QPolynomial multifactorial_ratio(long n, long k, long r, long m) {
  QPolynomial p = 1;
  for (long j = n - k + 1; j <= n; ++j) p *= q_bracket(r * j + m);
  return p;
}

}  // namespace detail

/// Rothe: (sum_j (-1)^j q^{binom(j,2)} [n,j] x^j, (1-x)(1-qx)...(1-q^{n-1}x)).
inline std::pair<XPolynomial, XPolynomial> cf_rothe_lhs_rhs(long n) {
  std::vector<QRational> lhs(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j)
    lhs[static_cast<std::size_t>(j)] =
        detail::signed_q_power(j, binom2(j)) * QRational(q_binomial(n, j));
  XPolynomial rhs = 1;
  for (long i = 0; i < n; ++i)
    rhs *= XPolynomial{QRational(1), -QRational(QPolynomial::monomial(static_cast<std::size_t>(i)))};
  return {XPolynomial(std::move(lhs)), rhs};
}

/// Orthogonal polynomials of L(x^n) = q^{binom(n,2)}:
/// sum_j (-1)^j q^{(n-1) j} [n,j] x^{n-j}. The exponent (n-1)j is the one
/// the oracle produces; it is also what makes the Rothe argument go through.
inline XPolynomial cf_geometric_poly(long n) {
  std::vector<QRational> c(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j)
    c[static_cast<std::size_t>(n - j)] =
        detail::signed_q_power(j, (n - 1) * j) * QRational(q_binomial(n, j));
  return XPolynomial(std::move(c));
}

/// F(x^m p_n) = q^{binom(n,2)+binom(m,2)} (q^m - 1)(q^m - q)...(q^m - q^{n-1}).
inline QRational cf_geometric_norm(long m, long n) {
  QPolynomial r = QPolynomial::monomial(static_cast<std::size_t>(binom2(n) + binom2(m)));
  const QPolynomial qm = QPolynomial::monomial(static_cast<std::size_t>(m));
  for (long j = 0; j < n; ++j) r *= qm - QPolynomial::monomial(static_cast<std::size_t>(j));
  return r;
}

/// Monic q-Laguerre: sum_k (-1)^k q^{binom(k,2)} [n,k] a(n)/a(n-k) x^{n-k},
/// a(n) = [n+m]!/[m]!.
inline XPolynomial cf_qlaguerre(long n, long m) {
  std::vector<QRational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(n - k)] = detail::signed_q_power(k, binom2(k)) *
                                         QRational(q_binomial(n, k) * detail::multifactorial_ratio(n, k, 1, m));
#ifdef QORTHO_PERTURB_CLOSED_FORM
  // Negative-control build: one coefficient is deliberately wrong.
  if (n == 3) c[1] += QRational(QPolynomial::q());
#endif
  return XPolynomial(std::move(c));
}

/// The q-Laguerre polynomial with q replaced by 1/q, written over [n,k]_q:
/// a(n;1/q) sum_k (-1)^k q^{-kn + binom(k+1,2)} [n,k] x^{n-k} / a(n-k;1/q).
inline XPolynomial cf_qlaguerre_reciprocal(long n, long m) {
  auto a_recip = [m](long j) {
    return QRational(detail::multifactorial_ratio(j, j, 1, m)).substitute_reciprocal();
  };
  const QRational an = a_recip(n);
  std::vector<QRational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(n - k)] = an * detail::signed_q_power(k, -k * n + binom2(k + 1)) *
                                         QRational(q_binomial(n, k)) / a_recip(n - k);
  return XPolynomial(std::move(c));
}

/// sum_k (-1)^k q^{r binom(k,2)} [n,k]_{q^r} a(n)/a(n-k) x^{n-k},
/// a(n) = prod_{j=1}^n [rj+m]. m = -1 with r = 2 gives a(n) = [2n-1]!!.
inline XPolynomial cf_multifactorial_poly(long n, long r, long m) {
  const QBase base(static_cast<unsigned>(r));
  std::vector<QRational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(n - k)] =
        detail::signed_q_power(k, r * binom2(k)) *
        QRational(q_binomial(n, k, base) * detail::multifactorial_ratio(n, k, r, m));
  return XPolynomial(std::move(c));
}

/// Discrete q-Hermite: sum_k (-1)^k q^{2 binom(k,2)} [2n,2k] [2k-1]!! x^{n-k}.
inline XPolynomial cf_qhermite(long n) {
  std::vector<QRational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(n - k)] =
        detail::signed_q_power(k, 2 * binom2(k)) *
        QRational(q_binomial(2 * n, 2 * k) * q_double_factorial(k, Parity::odd));
  return XPolynomial(std::move(c));
}

/// Monic q-Chebyshev of the second kind:
/// sum_j (-1)^j q^{2 binom(j,2)} [n-j,j]_{q^2} / (-q^{n-2j+1};q)_{2j} x^{n-2j}.
inline XPolynomial cf_chebU(long n) {
  std::vector<QRational> c(static_cast<std::size_t>(n) + 1);
  for (long j = 0; 2 * j <= n; ++j)
    c[static_cast<std::size_t>(n - 2 * j)] =
        detail::signed_q_power(j, 2 * binom2(j)) *
        QRational::normalize(q_binomial(n - j, j, QBase(2)),
                             q_pochhammer_signed(-1, static_cast<std::size_t>(n - 2 * j + 1),
                                                 static_cast<std::size_t>(2 * j)));
  return XPolynomial(std::move(c));
}

/// U_n = (1+q^n) x U_{n-1} - q^{n-2} U_{n-2}, U_0 = 1, U_1 = (1+q) x.
inline XPolynomial cf_chebU_rescaled(long n) {
  XPolynomial prev = 1;
  if (n == 0) return prev;
  XPolynomial cur = XPolynomial::monomial(1, QPolynomial{1, 1});
  for (long k = 2; k <= n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    XPolynomial next = cur.shifted(1).scaled(QPolynomial(1) + QPolynomial::monomial(ku)) -
                       prev.scaled(QPolynomial::monomial(ku - 2));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Monic q-Chebyshev of the first kind:
/// sum_k (-1)^k q^{2 binom(k,2)} [n]/[n-k] [n-k,k] / ((-q;q)_k (-q^{n-k};q)_k) x^{n-2k}.
inline XPolynomial cf_chebT(long n) {
  if (n == 0) return 1;
  std::vector<QRational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; 2 * k <= n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const QRational ratio = QRational::normalize(q_bracket(n), q_bracket(n - k));
    const QPolynomial den = q_pochhammer_signed(-1, 1, ku) *
                            q_pochhammer_signed(-1, static_cast<std::size_t>(n - k), ku);
    c[static_cast<std::size_t>(n - 2 * k)] = detail::signed_q_power(k, 2 * binom2(k)) * ratio *
                                             QRational::normalize(q_binomial(n - k, k), den);
  }
  return XPolynomial(std::move(c));
}

/// T_n = (1+q^{n-1}) x T_{n-1} - q^{n-2} T_{n-2}, T_0 = 1, T_1 = x.
inline XPolynomial cf_chebT_rescaled(long n) {
  XPolynomial prev = 1;
  if (n == 0) return prev;
  XPolynomial cur = XPolynomial::x();
  for (long k = 2; k <= n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    XPolynomial next = cur.shifted(1).scaled(QPolynomial(1) + QPolynomial::monomial(ku - 1)) -
                       prev.scaled(QPolynomial::monomial(ku - 2));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// q-Fibonacci: sum_k (-1)^k q^{binom(k,2)} [n-k,k] x^{n-2k}.
inline XPolynomial cf_qfibonacci(long n) {
  std::vector<QRational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; 2 * k <= n; ++k)
    c[static_cast<std::size_t>(n - 2 * k)] =
        detail::signed_q_power(k, binom2(k)) * QRational(q_binomial(n - k, k));
  return XPolynomial(std::move(c));
}

/// q-Lucas: sum_k (-1)^k q^{binom(k,2)} [n-k,k] [n]/[n-k] x^{n-2k}; L_0 = 1.
inline XPolynomial cf_qlucas(long n) {
  if (n == 0) return 1;
  std::vector<QRational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; 2 * k <= n; ++k)
    c[static_cast<std::size_t>(n - 2 * k)] = detail::signed_q_power(k, binom2(k)) *
                                             QRational(q_binomial(n - k, k)) *
                                             QRational::normalize(q_bracket(n), q_bracket(n - k));
  return XPolynomial(std::move(c));
}

/// Classical (q = 1) formulas, written independently of the q-versions.
namespace classical {

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// (2n-1)!! with (-1)!! = 1.
inline Integer odd_double_factorial(long n) {
  Integer r = 1;
  for (long j = 1; j <= n; ++j) r *= 2 * j - 1;
  return r;
}

/// prod_{j=1}^n (rj + m)
inline Integer multifactorial_moment(long n, long r, long m) {
  Integer a = 1;
  for (long j = 1; j <= n; ++j) a *= r * j + m;
  return a;
}

inline XPolynomial from_rationals(const std::vector<RationalNumber>& c) {
  std::vector<QRational> v;
  for (const auto& x : c) v.emplace_back(x);
  return XPolynomial(std::move(v));
}

/// Monic Laguerre: sum_j (-1)^{n-j} binom(n+m, n-j) n!/j! x^j.
inline XPolynomial laguerre(long n, long m) {
  std::vector<RationalNumber> c(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    RationalNumber v(binomial(n + m, n - j) * factorial(n) / factorial(j));
    c[static_cast<std::size_t>(j)] = (n - j) % 2 ? RationalNumber(-v) : v;
  }
  return from_rationals(c);
}

/// sum_k (-1)^k binom(n,k) a(n)/a(n-k) x^{n-k}, a(n) = prod (rj+m).
inline XPolynomial multifactorial_poly(long n, long r, long m) {
  std::vector<RationalNumber> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    RationalNumber v(binomial(n, k) * multifactorial_moment(n, r, m),
                     multifactorial_moment(n - k, r, m));
    v.canonicalize();
    c[static_cast<std::size_t>(n - k)] = k % 2 ? RationalNumber(-v) : v;
  }
  return from_rationals(c);
}

/// Hermite H_n = sum_k (-1)^k binom(n,2k) (2k-1)!! x^{n-2k}.
inline XPolynomial hermite_H(long n) {
  std::vector<RationalNumber> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; 2 * k <= n; ++k) {
    RationalNumber v(binomial(n, 2 * k) * odd_double_factorial(k));
    c[static_cast<std::size_t>(n - 2 * k)] = k % 2 ? RationalNumber(-v) : v;
  }
  return from_rationals(c);
}

/// h_n = sum_k (-1)^k binom(2n,2k) (2k-1)!! x^{n-k}.
inline XPolynomial hermite_h(long n) {
  std::vector<RationalNumber> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    RationalNumber v(binomial(2 * n, 2 * k) * odd_double_factorial(k));
    c[static_cast<std::size_t>(n - k)] = k % 2 ? RationalNumber(-v) : v;
  }
  return from_rationals(c);
}

/// u_n = U_n/2^n = sum_k (-1)^k binom(n-k,k) 4^{-k} x^{n-2k}.
inline XPolynomial chebyshev_u(long n) {
  std::vector<RationalNumber> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; 2 * k <= n; ++k) {
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    RationalNumber v(binomial(n - k, k), four_k);
    v.canonicalize();
    c[static_cast<std::size_t>(n - 2 * k)] = k % 2 ? RationalNumber(-v) : v;
  }
  return from_rationals(c);
}

/// t_n = T_n/2^{n-1} = sum_k (-1)^k n/(n-k) binom(n-k,k) 4^{-k} x^{n-2k}; t_0 = 1.
inline XPolynomial chebyshev_t(long n) {
  if (n == 0) return 1;
  std::vector<RationalNumber> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; 2 * k <= n; ++k) {
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    RationalNumber v(binomial(n - k, k) * n, four_k * (n - k));
    v.canonicalize();
    c[static_cast<std::size_t>(n - 2 * k)] = k % 2 ? RationalNumber(-v) : v;
  }
  return from_rationals(c);
}

/// Aerated factorial-moment polynomials:
/// P_{2n} = sum_j (-1)^j binom(n,j) binom(n+m,j) j! x^{2n-2j},
/// P_{2n+1} = sum_j (-1)^j binom(n,j) binom(n+m+1,j) j! x^{2n+1-2j}.
inline XPolynomial factorial_aerated(long N, long m) {
  const long n = N / 2;
  const long extra = N % 2;
  std::vector<RationalNumber> c(static_cast<std::size_t>(N) + 1);
  for (long j = 0; j <= n; ++j) {
    RationalNumber v(binomial(n, j) * binomial(n + m + extra, j) * factorial(j));
    c[static_cast<std::size_t>(N - 2 * j)] = j % 2 ? RationalNumber(-v) : v;
  }
  return from_rationals(c);
}

/// (s_n, t_n) = ((2n+1) r + m, r(n+1)(rn+r+m)); r = 1 gives the factorial case.
inline std::pair<RationalNumber, RationalNumber> multifactorial_st(long n, long r, long m) {
  return {RationalNumber((2 * n + 1) * r + m), RationalNumber(r * (n + 1) * (r * n + r + m))};
}

/// T_{2n} = r(n+1) + m, T_{2n+1} = r(n+1).
inline RationalNumber multifactorial_T(long k, long r, long m) {
  const long n = k / 2;
  return k % 2 ? RationalNumber(r * (n + 1)) : RationalNumber(r * (n + 1) + m);
}

/// binom(n,k) a(n)/a(k) with a(n) = prod (rj+m).
inline RationalNumber multifactorial_triangle(long n, long k, long r, long m) {
  RationalNumber v(binomial(n, k) * multifactorial_moment(n, r, m), multifactorial_moment(k, r, m));
  v.canonicalize();
  return v;
}

/// (2n-1)!!/(2k-1)!! binom(n,k).
inline RationalNumber hermite_triangle(long n, long k) {
  RationalNumber v(odd_double_factorial(n) * binomial(n, k), odd_double_factorial(k));
  v.canonicalize();
  return v;
}

}  // namespace classical

}  // namespace qortho
