#pragma once

// Cross-checks every closed form against the determinant oracle and the
// Stieltjes recurrence, and collects the outcome in a VerificationReport.
// Mismatches never throw; they become report entries carrying both sides.

#include "qortho/families.hpp"
#include "qortho/serialize.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qortho {

enum class CheckStatus { match, mismatch, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::match: return "match";
    case CheckStatus::mismatch: return "mismatch";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

/// One comparison. left/right are populated for mismatches and skips only.
struct CheckRecord {
  std::string family;
  std::size_t n = 0;
  std::string check;
  CheckStatus status = CheckStatus::match;
  nlohmann::json left;
  nlohmann::json right;
};

class VerificationReport {
 public:
  void add(CheckRecord r) { entries_.push_back(std::move(r)); }
  void merge(VerificationReport other) {
    for (auto& e : other.entries_) entries_.push_back(std::move(e));
  }

  /// Orders entries by (family, n, check).
  void sort() {
    std::stable_sort(entries_.begin(), entries_.end(), [](const CheckRecord& a, const CheckRecord& b) {
      return std::tie(a.family, a.n, a.check) < std::tie(b.family, b.n, b.check);
    });
  }

  const std::vector<CheckRecord>& entries() const { return entries_; }

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [s](const CheckRecord& e) { return e.status == s; }));
  }
  std::size_t mismatches() const { return count(CheckStatus::mismatch); }
  bool all_match() const { return mismatches() == 0; }

  nlohmann::json to_json() const {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : entries_) {
      nlohmann::json j = {{"family", e.family}, {"n", e.n}, {"check", e.check}, {"status", qortho::to_string(e.status)}};
      if (!e.left.is_null()) j["left"] = e.left;
      if (!e.right.is_null()) j["right"] = e.right;
      a.push_back(std::move(j));
    }
    return {{"entries", a},
            {"matches", count(CheckStatus::match)},
            {"mismatches", mismatches()},
            {"skipped", count(CheckStatus::skipped)}};
  }

 private:
  std::vector<CheckRecord> entries_;
};

struct VerifyOptions {
  /// Replaces the family's closed-form p_n (used for negative controls).
  std::function<std::optional<XPolynomial>(std::size_t)> closed_override;
};

namespace detail {

inline nlohmann::json encode(const QRational& v) { return to_json(v); }
inline nlohmann::json encode(const XPolynomial& v) { return to_json(v); }
inline nlohmann::json encode(const std::vector<QRational>& v) { return to_json(v); }
inline nlohmann::json encode(const std::pair<QRational, QRational>& v) {
  return nlohmann::json::array({to_json(v.first), to_json(v.second)});
}

class Checker {
 public:
  Checker(VerificationReport& report, std::string family) : report_(report), family_(std::move(family)) {}

  template <typename T>
  void equal(std::size_t n, const std::string& check, const T& left, const T& right) {
    if (left == right) {
      report_.add({family_, n, check, CheckStatus::match, {}, {}});
    } else {
      report_.add({family_, n, check, CheckStatus::mismatch, encode(left), encode(right)});
    }
  }

  /// Runs body; an exception becomes a mismatch entry for (n, check).
  template <typename F>
  void guarded(std::size_t n, const std::string& check, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report_.add({family_, n, check, CheckStatus::mismatch, nlohmann::json{{"error", e.what()}}, {}});
    }
  }

  void skipped(std::size_t n, const std::string& check, const std::string& reason) {
    report_.add({family_, n, check, CheckStatus::skipped, reason, {}});
  }

  void expect(std::size_t n, const std::string& check, bool ok, nlohmann::json left, nlohmann::json right) {
    if (ok)
      report_.add({family_, n, check, CheckStatus::match, {}, {}});
    else
      report_.add({family_, n, check, CheckStatus::mismatch, std::move(left), std::move(right)});
  }

 private:
  VerificationReport& report_;
  std::string family_;
};

inline XPolynomial at_one(const XPolynomial& p) { return evaluate_at(p, 1); }
inline QRational at_one(const QRational& v) { return QRational(v.evaluate(1)); }

inline std::vector<QRational> zeros(std::size_t n) { return std::vector<QRational>(n); }

// Checks that need only q = 1 data, for the families with classical formulas.
inline void verify_classical(Checker& ck, const FamilyId& id, const MomentSequence& L, std::size_t N,
                             const std::function<std::optional<XPolynomial>(std::size_t)>& closed) {
  const MomentSequence L1 = specialize(L, 1);
  auto rm = multifactorial_params(id);
  std::optional<RecurrenceTable> table1;
  if (id.tag != FamilyTag::geometric_q) {
    ck.guarded(0, "q1.stieltjes", [&] { table1 = stieltjes(L1, N + 2); });
  }
  for (std::size_t n = 0; n <= N; ++n) {
    const long nl = static_cast<long>(n);
    std::optional<XPolynomial> classical_p;
    switch (id.tag) {
      case FamilyTag::geometric_q: {
        XPolynomial p = 1;
        for (std::size_t i = 0; i < n; ++i) p *= XPolynomial{QRational(-1), QRational(1)};
        classical_p = p;
        break;
      }
      case FamilyTag::q_factorial: classical_p = classical::laguerre(nl, id.m); break;
      case FamilyTag::multifactorial: classical_p = classical::multifactorial_poly(nl, id.r, id.m); break;
      case FamilyTag::q_double_factorial: classical_p = classical::hermite_h(nl); break;
      case FamilyTag::andrews_q_catalan: classical_p = even_part_compress(classical::chebyshev_u(2 * nl)); break;
      case FamilyTag::q_central_binomial: classical_p = even_part_compress(classical::chebyshev_t(2 * nl)); break;
      default: break;
    }
    if (classical_p) {
      ck.guarded(n, "q1.closed_poly", [&] {
        if (auto c = closed(n)) ck.equal(n, "q1.closed_poly", at_one(*c), *classical_p);
      });
      if (table1) {
        ck.guarded(n, "q1.oracle_poly", [&] { ck.equal(n, "q1.oracle_poly", orthopoly_det(L1, n), *classical_p); });
      }
    }
    // Classical s, t for factorial and multifactorial moments.
    if (rm && id.tag != FamilyTag::q_double_factorial && table1) {
      const auto [s1, t1] = classical::multifactorial_st(nl, rm->first, rm->second);
      const std::pair<QRational, QRational> expected{QRational(s1), QRational(t1)};
      ck.equal(n, "q1.stieltjes_st", std::pair<QRational, QRational>{table1->s[n], table1->t[n]}, expected);
      ck.guarded(n, "q1.closed_st", [&] {
        const auto [cs, ct] = closed_st(id, n);
        ck.equal(n, "q1.closed_st", std::pair<QRational, QRational>{at_one(cs), at_one(ct)}, expected);
      });
      ck.guarded(n, "q1.closed_T", [&] {
        std::vector<QRational> got, want;
        for (std::size_t k = 2 * n; k <= 2 * n + 1; ++k) {
          got.push_back(at_one(closed_T(id, k)));
          want.emplace_back(classical::multifactorial_T(static_cast<long>(k), rm->first, rm->second));
        }
        ck.equal(n, "q1.closed_T", got, want);
      });
    }
    if (table1) {
      ck.guarded(n, "q1.triangle", [&] {
        std::optional<std::vector<QRational>> want;
        if (rm && id.tag != FamilyTag::q_double_factorial) {
          want.emplace();
          for (long k = 0; k <= nl; ++k)
            want->emplace_back(classical::multifactorial_triangle(nl, k, rm->first, rm->second));
        } else if (id.tag == FamilyTag::q_double_factorial) {
          want.emplace();
          for (long k = 0; k <= nl; ++k) want->emplace_back(classical::hermite_triangle(nl, k));
        }
        if (want) ck.equal(n, "q1.triangle", expansion_triangle(*table1, n).row(n), *want);
      });
    }
    // Aerated polynomials at q = 1.
    ck.guarded(n, "q1.aerated_poly", [&] {
      switch (id.tag) {
        case FamilyTag::q_factorial:
          ck.equal(n, "q1.aerated_poly", at_one(aerated_orthopoly(id, n)), classical::factorial_aerated(nl, id.m));
          break;
        case FamilyTag::q_double_factorial:
          ck.equal(n, "q1.aerated_poly", at_one(aerated_orthopoly(id, n)), classical::hermite_H(nl));
          break;
        case FamilyTag::andrews_q_catalan:
          ck.equal(n, "q1.aerated_poly", at_one(cf_chebU(nl)), classical::chebyshev_u(nl));
          break;
        case FamilyTag::q_central_binomial:
          ck.equal(n, "q1.aerated_poly", at_one(cf_chebT(nl)), classical::chebyshev_t(nl));
          break;
        default: break;
      }
    });
    if (id.tag == FamilyTag::andrews_q_catalan || id.tag == FamilyTag::q_central_binomial) {
      ck.guarded(n, "q1.closed_T", [&] {
        std::vector<QRational> got, want;
        for (std::size_t k = 2 * n; k <= 2 * n + 1; ++k) {
          got.push_back(at_one(closed_T(id, k)));
          const bool first = id.tag == FamilyTag::q_central_binomial && k == 0;
          want.emplace_back(RationalNumber(1, first ? 2 : 4));
        }
        ck.equal(n, "q1.closed_T", got, want);
      });
    }
  }
}

}  // namespace detail

/**
 * Runs every applicable cross-check for one family at n = 0..max_n:
 * determinant vs recurrence vs closed-form polynomials, orthogonality and
 * norms, both Hankel routes, closed s/t/T against Stieltjes, the aerated
 * round trip, expansion triangles, q = 1 specializations, and the
 * family-specific identities.
 */
inline VerificationReport verify_family(const FamilyId& id, std::size_t max_n, const VerifyOptions& opt = {}) {
  VerificationReport report;
  detail::Checker ck(report, id.name());
  const MomentFamily fam = make_family(id);
  const MomentSequence& L = fam.moments;
  const std::size_t N = max_n;

  auto closed = [&](std::size_t n) -> std::optional<XPolynomial> {
    if (opt.closed_override) return opt.closed_override(n);
    return closed_poly(id, n);
  };

  RecurrenceTable table;
  try {
    table = stieltjes(L, N + 2);
  } catch (const std::exception& e) {
    ck.expect(0, "stieltjes", false, nlohmann::json{{"error", e.what()}}, {});
    return report;
  }
  std::vector<QRational> hankel(N + 2);
  for (std::size_t n = 0; n < hankel.size(); ++n) hankel[n] = hankel_direct(L, n);
  const ExpansionTriangle triangle = expansion_triangle(table, N);

  const bool symmetric_family =
      id.tag == FamilyTag::fibonacci_functional || id.tag == FamilyTag::lucas_functional;
  std::optional<RecurrenceTable> aerated_table;
  if (!symmetric_family) {
    ck.guarded(0, "aerated.stieltjes", [&] { aerated_table = stieltjes(aerated_moments(id), 2 * N + 3); });
  }
  std::vector<QRational> T_closed;
  if (has_closed_T(id))
    for (std::size_t k = 0; k <= 2 * N + 1; ++k) T_closed.push_back(closed_T(id, k));
  std::vector<XPolynomial> P_closed_T;
  if (!T_closed.empty()) P_closed_T = symmetric_polys(T_closed, 2 * N);

  for (std::size_t n = 0; n <= N; ++n) {
    std::optional<XPolynomial> pdet;
    ck.guarded(n, "poly.det", [&] { pdet = orthopoly_det(L, n); });
    if (!pdet) continue;

    ck.equal(n, "poly.det_vs_recurrence", *pdet, orthopoly_recur(table, n));
    ck.guarded(n, "poly.det_vs_closed", [&] {
      if (auto c = closed(n)) ck.equal(n, "poly.det_vs_closed", *pdet, *c);
    });

    std::vector<QRational> lower;
    for (std::size_t k = 0; k < n; ++k) lower.push_back(apply_functional(L, pdet->shifted(k)));
    ck.equal(n, "orthogonality", lower, detail::zeros(n));
    const QRational norm = apply_functional(L, *pdet * *pdet);
    ck.expect(n, "norm.nonzero", !norm.is_zero(), to_json(norm), "nonzero");
    ck.equal(n, "norm.stieltjes", table.norms[n], norm);
    ck.equal(n, "norm.hankel_ratio", table.norms[n], hankel[n + 1] / hankel[n]);
    ck.equal(n, "hankel.two_path", hankel[n], hankel_product(table, n));
    ck.equal(n, "triangle.column0", triangle(n, 0), L(n));

    if (closed_triangle(id, 0, 0)) {
      std::vector<QRational> want;
      for (std::size_t k = 0; k <= n; ++k) want.push_back(*closed_triangle(id, n, k));
      ck.equal(n, "triangle.closed", triangle.row(n), want);
    }

    if (has_closed_st(id)) {
      ck.equal(n, "recurrence.closed_st", std::pair<QRational, QRational>{table.s[n], table.t[n]}, closed_st(id, n));
    }

    if (!T_closed.empty()) {
      const auto [s, t] = deaerate(T_closed, n + 1);
      ck.equal(n, "recurrence.deaerated_closed_T", std::pair<QRational, QRational>{s[n], t[n]},
               std::pair<QRational, QRational>{table.s[n], table.t[n]});
      ck.equal(n, "aerated.compress", even_part_compress(P_closed_T[2 * n]), *pdet);
    }

    if (aerated_table) {
      const auto& at = *aerated_table;
      ck.equal(n, "aerated.s_zero", std::vector<QRational>{at.s[2 * n], at.s[2 * n + 1]}, detail::zeros(2));
      const auto [s, t] = deaerate(at.t, n + 1);
      ck.equal(n, "aerated.deaerate", std::pair<QRational, QRational>{s[n], t[n]},
               std::pair<QRational, QRational>{table.s[n], table.t[n]});
      if (!T_closed.empty()) {
        ck.equal(n, "aerated.closed_T", std::vector<QRational>{at.t[2 * n], at.t[2 * n + 1]},
                 std::vector<QRational>{T_closed[2 * n], T_closed[2 * n + 1]});
      }
      const XPolynomial P2n = orthopoly_recur(at, 2 * n);
      ck.equal(n, "aerated.compress_stieltjes", even_part_compress(P2n), *pdet);
      ck.guarded(n, "aerated.det_vs_recurrence", [&] {
        const XPolynomial Pdet = orthopoly_det(aerated_moments(id), n);
        ck.equal(n, "aerated.det_vs_recurrence", Pdet, orthopoly_recur(at, n));
        if (auto c = closed_aerated_poly(id, n)) ck.equal(n, "aerated.det_vs_closed", Pdet, *c);
      });
    }

    if (symmetric_family) {
      ck.equal(n, "symmetric.s_zero", table.s[n], QRational());
      const long nl = static_cast<long>(n);
      QRational even = id.tag == FamilyTag::lucas_functional
                           ? QRational(q_binomial(2 * nl, nl))
                           : QRational::normalize(q_binomial(2 * nl, nl), q_bracket(nl + 1));
      ck.equal(n, "functional.moments", std::vector<QRational>{L(2 * n), L(2 * n + 1)},
               std::vector<QRational>{even, QRational()});
    }

    switch (id.tag) {
      case FamilyTag::geometric_q: {
        const long nl = static_cast<long>(n);
        // q^{3 binom(n,2)} (q-1)^n [n]!
        QPolynomial expected = QPolynomial::monomial(static_cast<std::size_t>(3 * binom2(nl))) * q_factorial(nl);
        for (long i = 0; i < nl; ++i) expected *= QPolynomial{-1, 1};
        ck.equal(n, "norm.closed_form", table.norms[n], QRational(expected));
        std::vector<QRational> got, want;
        const XPolynomial p = cf_geometric_poly(nl);
        for (long m = 0; m <= static_cast<long>(N); ++m) {
          got.push_back(apply_functional(L, p.shifted(static_cast<std::size_t>(m))));
          want.push_back(cf_geometric_norm(m, nl));
        }
        ck.equal(n, "norm.functional", got, want);
        break;
      }
      case FamilyTag::q_factorial: {
        const long nl = static_cast<long>(n);
        // a(n; 1/q) q^{binom(n,2) + mn} = a(n; q)
        const QRational scaled = L(n).substitute_reciprocal() *
                                 QRational(QPolynomial::monomial(static_cast<std::size_t>(binom2(nl) + id.m * nl)));
        ck.equal(n, "reciprocal.moment", scaled, L(n));
        ck.guarded(n, "reciprocal.poly", [&] {
          if (auto c = closed(n))
            ck.equal(n, "reciprocal.poly", cf_qlaguerre_reciprocal(nl, id.m),
                     c->map_coefficients([](const QRational& v) { return v.substitute_reciprocal(); }));
        });
        break;
      }
      case FamilyTag::andrews_q_catalan: {
        const long nl = static_cast<long>(n);
        ck.equal(n, "rescaled.U", cf_chebU_rescaled(nl),
                 cf_chebU(nl).scaled(q_pochhammer_signed(-1, 1, n)));
        break;
      }
      case FamilyTag::q_central_binomial: {
        const long nl = static_cast<long>(n);
        if (n >= 1)
          ck.equal(n, "rescaled.T", cf_chebT_rescaled(nl), cf_chebT(nl).scaled(q_pochhammer_signed(-1, 1, n - 1)));
        break;
      }
      default: break;
    }
  }

  detail::verify_classical(ck, id, L, N, closed);
  report.sort();
  return report;
}

/// The family-independent q-series identities for n = 0..max_n.
inline VerificationReport verify_identities(std::size_t max_n) {
  VerificationReport report;
  detail::Checker ck(report, "identities");
  for (std::size_t n = 0; n <= max_n; ++n) {
    const long nl = static_cast<long>(n);
    const auto [lhs, rhs] = cf_rothe_lhs_rhs(nl);
    ck.equal(n, "rothe", lhs, rhs);

    // [2][2n-1]!!/[2n+2]!! = 1/[n+1]_{q^2} [2n,n]_{q^2} / prod_{j=1}^{2n} (1+q^j)
    const QRational catalan_lhs = QRational::normalize(q_bracket(2) * q_double_factorial(nl, Parity::odd),
                                                       q_double_factorial(nl + 1, Parity::even));
    const QRational catalan_rhs = QRational::normalize(
        q_binomial(2 * nl, nl, QBase(2)), q_bracket(nl + 1, QBase(2)) * q_pochhammer_signed(-1, 1, 2 * n));
    ck.equal(n, "q-catalan.andrews", catalan_lhs, catalan_rhs);

    // [2n-1]!!/[2n]!! = [2n,n]_{q^2} / ((-q;q)_n (-q^{n+1};q)_n)
    const QRational central_lhs =
        QRational::normalize(q_double_factorial(nl, Parity::odd), q_double_factorial(nl, Parity::even));
    const QRational central_rhs = QRational::normalize(
        q_binomial(2 * nl, nl, QBase(2)), q_pochhammer_signed(-1, 1, n) * q_pochhammer_signed(-1, n + 1, n));
    ck.equal(n, "q-central-binomial.product", central_lhs, central_rhs);

    // [2n,2k] [2k-1]!! = [n,k]_{q^2} [2n-1]!!/[2n-2k-1]!!
    std::vector<QRational> left, right;
    for (long k = 0; k <= nl; ++k) {
      left.emplace_back(q_binomial(2 * nl, 2 * k) * q_double_factorial(k, Parity::odd));
      right.push_back(QRational::normalize(q_binomial(nl, k, QBase(2)) * q_double_factorial(nl, Parity::odd),
                                           q_double_factorial(nl - k, Parity::odd)));
    }
    ck.equal(n, "binomial.double_factorial", left, right);
  }
  report.sort();
  return report;
}

/// Every registry family plus the identities; families run concurrently and
/// the merged report is sorted, so output is deterministic.
inline VerificationReport verify_all(std::size_t max_n) {
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& [id, depth] : registry(max_n))
    jobs.push_back(std::async(std::launch::async, [id = id, depth = depth] { return verify_family(id, depth); }));
  VerificationReport report = verify_identities(max_n);
  for (auto& j : jobs) report.merge(j.get());
  report.sort();
  return report;
}

}  // namespace qortho
