#pragma once

// From moments to orthogonal polynomials: the bordered-determinant oracle,
// the Stieltjes procedure, the three-term recurrence, the expansion triangle,
// Hankel determinants by elimination and by the product of t_j, and the
// aerated/deaerated relations between s, t and T.

#include "qortho/xpolynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qortho {

/// A vanishing Hankel determinant d_level was met.
class QuasiDefiniteError : public std::runtime_error {
 public:
  explicit QuasiDefiniteError(std::size_t level)
      : std::runtime_error("moment sequence not quasi-definite at level " + std::to_string(level)),
        level_(level) {}
  std::size_t level() const { return level_; }

 private:
  std::size_t level_;
};

/// s_0..s_{N-1}, t_0..t_{N-2} and norms L(p_0^2)..L(p_{N-1}^2).
struct RecurrenceTable {
  std::vector<QRational> s;
  std::vector<QRational> t;
  std::vector<QRational> norms;

  std::size_t depth() const { return s.size(); }
};

/// Rows 0..N of a(n, k); row n holds k = 0..n.
class ExpansionTriangle {
 public:
  explicit ExpansionTriangle(std::vector<std::vector<QRational>> rows) : rows_(std::move(rows)) {}

  const QRational& operator()(std::size_t n, std::size_t k) const {
    static const QRational zero;
    if (n >= rows_.size() || k > n) return zero;
    return rows_[n][k];
  }
  const std::vector<QRational>& row(std::size_t n) const { return rows_.at(n); }
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::vector<QRational>> rows_;
};

namespace detail {

// Matrix over Z[q] obtained by scaling each column of a QRational matrix by a
// common denominator; det(original) = det(cleared) / prod(scale).
struct ClearedMatrix {
  std::vector<std::vector<ZPoly>> entries;  // [row][col]
  QPolynomial scale = 1;
};

inline ClearedMatrix clear_columns(const std::vector<std::vector<QRational>>& m, std::size_t cols) {
  ClearedMatrix out;
  out.entries.assign(m.size(), std::vector<ZPoly>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    QPolynomial lcm = 1;
    for (const auto& row : m) {
      const QPolynomial& d = row[j].den();
      if (d.is_one()) continue;
      const QPolynomial g = gcd(lcm, d);
      lcm = lcm * divexact(d, g);
    }
    Integer content_lcm = 1;
    std::vector<QPolynomial> col(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      const QRational& e = m[i][j];
      col[i] = e.den().is_one() ? e.num() * lcm : e.num() * divexact(lcm, e.den());
      if (!col[i].is_zero())
        mpz_lcm(content_lcm.get_mpz_t(), content_lcm.get_mpz_t(),
                col[i].content().get_den_mpz_t());
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (col[i].is_zero()) continue;
      const RationalNumber c = col[i].content() * RationalNumber(content_lcm);
      out.entries[i][j] = scale(col[i].primitive_part(), c.get_num());
    }
    out.scale *= lcm * QPolynomial(RationalNumber(content_lcm));
  }
  return out;
}

// Fraction-free elimination with row pivoting; returns the determinant.
inline ZPoly bareiss_det(std::vector<std::vector<ZPoly>> a) {
  const std::size_t n = a.size();
  detail::ZPoly prev{1};
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].empty()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ZPoly v = mul(a[k][k], a[i][j]);
        if (!a[i][k].empty() && !a[k][j].empty()) v = sub(v, mul(a[i][k], a[k][j]));
        a[i][j] = divexact(v, prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? neg(a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace detail

/// det(L(x^{i+j}))_{i,j<n}; d_0 = 1.
inline QRational hankel_direct(const MomentSequence& L, std::size_t n) {
  if (n == 0) return 1;
  std::vector<std::vector<QRational>> m(n, std::vector<QRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = L(i + j);
  auto cleared = detail::clear_columns(m, n);
  const detail::ZPoly det = detail::bareiss_det(std::move(cleared.entries));
  if (det.empty()) return {};
  return QRational::normalize(QPolynomial::from_integer(det), cleared.scale);
}

/**
 * Monic orthogonal polynomial p_n as the bordered Hankel determinant divided
 * by d_n.
 *
 * One fraction-free elimination runs over the (n+1) x (n+1) bordered matrix;
 * the last column carries x^i in row i, so its entries are x-polynomials over
 * Z[q]. The k-th pivot is a scaled d_{k+1}, which is why a zero pivot means
 * the sequence is not quasi-definite and no row exchange is attempted.
 */
inline XPolynomial orthopoly_det(const MomentSequence& L, std::size_t n) {
  if (n == 0) return 1;
  std::vector<std::vector<QRational>> m(n + 1, std::vector<QRational>(n));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = L(i + j);
  auto a = detail::clear_columns(m, n).entries;
  // border[i][c] is the coefficient of x^c in the last column of row i.
  std::vector<std::vector<detail::ZPoly>> border(n + 1, std::vector<detail::ZPoly>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) border[i][i] = {1};

  detail::ZPoly prev{1};
  for (std::size_t k = 0; k < n; ++k) {
    const detail::ZPoly& piv = a[k][k];
    if (piv.empty()) throw QuasiDefiniteError(k + 1);
    for (std::size_t i = k + 1; i <= n; ++i) {
      const detail::ZPoly& aik = a[i][k];
      for (std::size_t j = k + 1; j < n; ++j) {
        detail::ZPoly v = detail::mul(piv, a[i][j]);
        if (!aik.empty() && !a[k][j].empty()) v = detail::sub(v, detail::mul(aik, a[k][j]));
        a[i][j] = detail::divexact(v, prev);
      }
      for (std::size_t c = 0; c <= n; ++c) {
        detail::ZPoly v = detail::mul(piv, border[i][c]);
        if (!aik.empty() && !border[k][c].empty())
          v = detail::sub(v, detail::mul(aik, border[k][c]));
        border[i][c] = detail::divexact(v, prev);
      }
    }
    prev = a[k][k];
  }
  const QPolynomial dn = QPolynomial::from_integer(prev);
  std::vector<QRational> coeffs(n + 1);
  for (std::size_t c = 0; c <= n; ++c)
    coeffs[c] = QRational::normalize(QPolynomial::from_integer(border[n][c]), dn);
  XPolynomial p(std::move(coeffs));
  if (!p.is_monic()) throw std::logic_error("orthopoly_det: result is not monic");
  return p;
}

/**
 * Stieltjes procedure to depth N:
 *   p_{k+1} = (x - s_k) p_k - t_{k-1} p_{k-1},
 *   s_k = L(x p_k^2) / L(p_k^2),  t_{k-1} = L(p_k^2) / L(p_{k-1}^2).
 */
inline RecurrenceTable stieltjes(const MomentSequence& L, std::size_t N) {
  RecurrenceTable table;
  XPolynomial prev, cur = 1;
  for (std::size_t k = 0; k < N; ++k) {
    const XPolynomial sq = cur * cur;
    QRational norm = apply_functional(L, sq);
    if (norm.is_zero()) throw QuasiDefiniteError(k + 1);
    const QRational s = apply_functional(L, sq.shifted(1)) / norm;
    XPolynomial next = cur.shifted(1) - cur.scaled(s);
    if (k > 0) {
      const QRational t = norm / table.norms.back();
      next -= prev.scaled(t);
      table.t.push_back(t);
    }
    table.s.push_back(s);
    table.norms.push_back(std::move(norm));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return table;
}

/// p_n from the three-term recurrence; needs depth >= n.
inline XPolynomial orthopoly_recur(const RecurrenceTable& table, std::size_t n) {
  if (n > table.s.size() || (n >= 2 && n - 2 >= table.t.size()))
    throw std::out_of_range("insufficient table depth");
  XPolynomial prev, cur = 1;
  for (std::size_t k = 0; k < n; ++k) {
    XPolynomial next = cur.shifted(1) - cur.scaled(table.s[k]);
    if (k > 0) next -= prev.scaled(table.t[k - 1]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// a(n,k) = a(n-1,k-1) + s_k a(n-1,k) + t_k a(n-1,k+1) for rows 0..N.
inline ExpansionTriangle expansion_triangle(const RecurrenceTable& table, std::size_t N) {
  if (N > table.s.size() || (N >= 2 && N - 2 >= table.t.size()))
    throw std::out_of_range("insufficient table depth");
  std::vector<std::vector<QRational>> rows;
  rows.push_back({QRational(1)});
  for (std::size_t n = 1; n <= N; ++n) {
    const auto& up = rows.back();
    std::vector<QRational> row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      QRational v;
      if (k >= 1) v += up[k - 1];
      if (k < up.size()) v += table.s[k] * up[k];
      if (k + 1 < up.size()) v += table.t[k] * up[k + 1];
      row[k] = std::move(v);
    }
    rows.push_back(std::move(row));
  }
  return ExpansionTriangle(std::move(rows));
}

/// d_n = prod_{i=1}^{n-1} prod_{j=0}^{i-1} t_j, with d_0 = d_1 = 1.
inline QRational hankel_product(const RecurrenceTable& table, std::size_t n) {
  if (n <= 1) return 1;
  if (table.t.size() < n - 1) throw std::out_of_range("insufficient table depth");
  QRational d = 1, partial = 1;
  for (std::size_t i = 1; i < n; ++i) {
    partial *= table.t[i - 1];
    d *= partial;
  }
  return d;
}

/// s_n = T_{2n-1} + T_{2n}, t_n = T_{2n} T_{2n+1} (T_{-1} = 0), n < N.
inline std::pair<std::vector<QRational>, std::vector<QRational>> deaerate(
    const std::vector<QRational>& T, std::size_t N) {
  if (T.size() < 2 * N) throw std::out_of_range("insufficient table depth");
  std::vector<QRational> s(N), t(N);
  for (std::size_t n = 0; n < N; ++n) {
    s[n] = (n > 0 ? T[2 * n - 1] : QRational()) + T[2 * n];
    t[n] = T[2 * n] * T[2 * n + 1];
  }
  return {std::move(s), std::move(t)};
}

/// T_0..T_{N-1} by Stieltjes on the given (symmetric) moments; every s must vanish.
inline std::vector<QRational> symmetric_T(const MomentSequence& L, std::size_t N) {
  RecurrenceTable table = stieltjes(L, N + 1);
  for (const auto& s : table.s)
    if (!s.is_zero()) throw std::domain_error("aerated sequence not symmetric");
  table.t.resize(N);
  return table.t;
}

/// P_0..P_n from P_k = x P_{k-1} - T_{k-2} P_{k-2}.
inline std::vector<XPolynomial> symmetric_polys(const std::vector<QRational>& T, std::size_t n) {
  if (n >= 2 && T.size() < n - 1) throw std::out_of_range("insufficient table depth");
  std::vector<XPolynomial> P;
  P.emplace_back(1);
  if (n >= 1) P.push_back(XPolynomial::x());
  for (std::size_t k = 2; k <= n; ++k) P.push_back(P[k - 1].shifted(1) - P[k - 2].scaled(T[k - 2]));
  return P;
}

}  // namespace qortho
