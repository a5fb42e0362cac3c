#pragma once

#include "qortho/closed_forms.hpp"
#include "qortho/orthocore.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qortho {

enum class FamilyTag {
  geometric_q,
  q_factorial,
  multifactorial,
  q_double_factorial,
  andrews_q_catalan,
  q_central_binomial,
  fibonacci_functional,
  lucas_functional,
};

/// Raised for requests a family cannot answer (e.g. no closed T).
class NotAvailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family name plus its integer parameters. m is used by q-factorial and
/// multifactorial, r by multifactorial only.
struct FamilyId {
  FamilyTag tag = FamilyTag::geometric_q;
  long m = 0;
  long r = 1;

  static FamilyId geometric() { return {FamilyTag::geometric_q}; }
  static FamilyId q_factorial(long m) { return {FamilyTag::q_factorial, m, 1}; }
  static FamilyId multifactorial(long r, long m) { return {FamilyTag::multifactorial, m, r}; }
  static FamilyId double_factorial() { return {FamilyTag::q_double_factorial}; }
  static FamilyId andrews_catalan() { return {FamilyTag::andrews_q_catalan}; }
  static FamilyId central_binomial() { return {FamilyTag::q_central_binomial}; }
  static FamilyId fibonacci() { return {FamilyTag::fibonacci_functional}; }
  static FamilyId lucas() { return {FamilyTag::lucas_functional}; }

  std::string name() const {
    switch (tag) {
      case FamilyTag::geometric_q: return "geometric-q";
      case FamilyTag::q_factorial: return "q-factorial:m=" + std::to_string(m);
      case FamilyTag::multifactorial:
        return "multifactorial:r=" + std::to_string(r) + ",m=" + std::to_string(m);
      case FamilyTag::q_double_factorial: return "q-double-factorial";
      case FamilyTag::andrews_q_catalan: return "andrews-q-catalan";
      case FamilyTag::q_central_binomial: return "q-central-binomial";
      case FamilyTag::fibonacci_functional: return "fibonacci-functional";
      case FamilyTag::lucas_functional: return "lucas-functional";
    }
    return "?";
  }

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Parses name[:key=value{,key=value}]. Throws std::invalid_argument.
inline FamilyId parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::map<std::string, long> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    if (rest.empty()) throw std::invalid_argument("empty parameter list in '" + std::string(spec) + "'");
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view kv = rest.substr(0, comma);
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw std::invalid_argument("malformed parameter '" + std::string(kv) + "'");
      const std::string key(kv.substr(0, eq));
      const std::string_view val = kv.substr(eq + 1);
      long v = 0;
      auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
      if (ec != std::errc() || ptr != val.data() + val.size() || val.empty())
        throw std::invalid_argument("parameter '" + key + "' is not an integer");
      if (!params.emplace(key, v).second) throw std::invalid_argument("duplicate parameter '" + key + "'");
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      if (comma != std::string_view::npos && rest.empty())
        throw std::invalid_argument("trailing comma in '" + std::string(spec) + "'");
    }
  }
  auto take = [&](const std::vector<std::string>& allowed) {
    for (const auto& [k, v] : params) {
      bool ok = false;
      for (const auto& a : allowed) ok = ok || a == k;
      if (!ok) throw std::invalid_argument("unknown parameter '" + k + "' for family '" + std::string(name) + "'");
    }
  };
  auto get = [&](const std::string& k, long def) {
    auto it = params.find(k);
    return it == params.end() ? def : it->second;
  };
  FamilyId id;
  if (name == "geometric-q") {
    take({});
    id = FamilyId::geometric();
  } else if (name == "q-factorial") {
    take({"m"});
    id = FamilyId::q_factorial(get("m", 0));
  } else if (name == "multifactorial") {
    take({"r", "m"});
    id = FamilyId::multifactorial(get("r", 1), get("m", 0));
  } else if (name == "q-double-factorial") {
    take({});
    id = FamilyId::double_factorial();
  } else if (name == "andrews-q-catalan") {
    take({});
    id = FamilyId::andrews_catalan();
  } else if (name == "q-central-binomial") {
    take({});
    id = FamilyId::central_binomial();
  } else if (name == "fibonacci-functional") {
    take({});
    id = FamilyId::fibonacci();
  } else if (name == "lucas-functional") {
    take({});
    id = FamilyId::lucas();
  } else {
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  }
  if (id.m < 0) throw std::invalid_argument("parameter m must be >= 0");
  if (id.r < 1) throw std::invalid_argument("parameter r must be >= 1");
  return id;
}

/// The coefficient c_{n,0} in x^n = sum_k c_{n,k} basis(k).
inline QRational functional_from_basis(const std::function<XPolynomial(std::size_t)>& basis,
                                       std::size_t n) {
  XPolynomial rest = XPolynomial::monomial(n);
  QRational c0;
  for (std::size_t k = n + 1; k-- > 0;) {
    const XPolynomial b = basis(k);
    if (b.degree() != static_cast<long>(k) || !b.is_monic())
      throw std::invalid_argument("basis element " + std::to_string(k) + " is not monic of degree " +
                                  std::to_string(k));
    const QRational c = rest[k];
    if (k == 0) c0 = c;
    if (!c.is_zero()) rest -= b.scaled(c);
  }
  return c0;
}

namespace detail {

// (r, m) such that a(n) = prod_{j=1}^n [rj + m].
inline std::optional<std::pair<long, long>> multifactorial_params(const FamilyId& id) {
  switch (id.tag) {
    case FamilyTag::q_factorial: return std::pair{1L, id.m};
    case FamilyTag::multifactorial: return std::pair{id.r, id.m};
    case FamilyTag::q_double_factorial: return std::pair{2L, -1L};
    default: return std::nullopt;
  }
}

inline std::function<XPolynomial(std::size_t)> cached_basis(XPolynomial (*gen)(long)) {
  auto cache = std::make_shared<std::vector<XPolynomial>>();
  auto mu = std::make_shared<std::mutex>();
  return [cache, mu, gen](std::size_t k) {
    std::lock_guard lock(*mu);
    while (cache->size() <= k) cache->push_back(gen(static_cast<long>(cache->size())));
    return (*cache)[k];
  };
}

}  // namespace detail

/// Exact moment a(n; q).
inline QRational family_moment(const FamilyId& id, std::size_t n) {
  const long nl = static_cast<long>(n);
  if (auto rm = detail::multifactorial_params(id)) {
    QPolynomial a = 1;
    for (long j = 1; j <= nl; ++j) a *= q_bracket(rm->first * j + rm->second);
    return a;
  }
  switch (id.tag) {
    case FamilyTag::geometric_q: return q_power_binom2(nl);
    case FamilyTag::andrews_q_catalan:
      // [2] [2n-1]!! / [2n+2]!!
      return QRational::normalize(q_bracket(2) * q_double_factorial(nl, Parity::odd),
                                  q_double_factorial(nl + 1, Parity::even));
    case FamilyTag::q_central_binomial:
      return QRational::normalize(q_double_factorial(nl, Parity::odd),
                                  q_double_factorial(nl, Parity::even));
    case FamilyTag::fibonacci_functional: {
      static const auto basis = detail::cached_basis(&cf_qfibonacci);
      return functional_from_basis(basis, n);
    }
    case FamilyTag::lucas_functional: {
      static const auto basis = detail::cached_basis(&cf_qlucas);
      return functional_from_basis(basis, n);
    }
    default: break;
  }
  throw std::invalid_argument("unknown family");
}

/// A(2n) = a(n), A(2n+1) = 0.
inline QRational aerated_moment(const FamilyId& id, std::size_t n) {
  return n % 2 ? QRational() : family_moment(id, n / 2);
}

inline bool has_closed_T(const FamilyId& id) {
  return detail::multifactorial_params(id) || id.tag == FamilyTag::andrews_q_catalan ||
         id.tag == FamilyTag::q_central_binomial;
}

inline bool has_closed_st(const FamilyId& id) { return detail::multifactorial_params(id).has_value(); }

/// T_n of the aerated sequence.
inline QRational closed_T(const FamilyId& id, std::size_t n) {
  const long nl = static_cast<long>(n);
  if (auto rm = detail::multifactorial_params(id)) {
    const auto [r, m] = *rm;
    const long h = nl / 2;
    // T_{2h} = q^{rh} [r(h+1)+m],  T_{2h+1} = q^{r(h+1)+m} [r(h+1)]
    if (nl % 2 == 0)
      return QPolynomial::monomial(static_cast<std::size_t>(r * h)) * q_bracket(r * (h + 1) + m);
    return QPolynomial::monomial(static_cast<std::size_t>(r * (h + 1) + m)) * q_bracket(r * (h + 1));
  }
  const auto one_plus = [](long e) { return QPolynomial(1) + QPolynomial::monomial(static_cast<std::size_t>(e)); };
  switch (id.tag) {
    case FamilyTag::andrews_q_catalan:
      return QRational::normalize(QPolynomial::monomial(n), one_plus(nl + 1) * one_plus(nl + 2));
    case FamilyTag::q_central_binomial:
      if (n == 0) return QRational::normalize(1, one_plus(1));
      return QRational::normalize(QPolynomial::monomial(n), one_plus(nl) * one_plus(nl + 1));
    default: break;
  }
  throw NotAvailableError("closed T not available for " + id.name());
}

/// (s_n, t_n) in closed form.
inline std::pair<QRational, QRational> closed_st(const FamilyId& id, std::size_t n) {
  auto rm = detail::multifactorial_params(id);
  if (!rm) throw NotAvailableError("closed s/t not available for " + id.name());
  const auto [r, m] = *rm;
  const long nl = static_cast<long>(n);
  // s_n = q^{rn}([r(n+1)+m] + q^m [rn]),  t_n = [(n+1)r][r(n+1)+m] q^{r(2n+1)+m}
  const QRational s = QRational(QPolynomial::monomial(static_cast<std::size_t>(r * nl))) *
                 (QRational(q_bracket(r * (nl + 1) + m)) +
                  detail::signed_q_power(0, m) * QRational(q_bracket(r * nl)));
  const QRational t = QRational(q_bracket((nl + 1) * r) * q_bracket(r * (nl + 1) + m)) *
                      detail::signed_q_power(0, r * (2 * nl + 1) + m);
  return {s, t};
}

/// The monic orthogonal polynomial p_n in closed form, where one is known.
inline std::optional<XPolynomial> closed_poly(const FamilyId& id, std::size_t n) {
  const long nl = static_cast<long>(n);
  switch (id.tag) {
    case FamilyTag::geometric_q: return cf_geometric_poly(nl);
    case FamilyTag::q_factorial: return cf_qlaguerre(nl, id.m);
    case FamilyTag::multifactorial: return cf_multifactorial_poly(nl, id.r, id.m);
    case FamilyTag::q_double_factorial: return cf_qhermite(nl);
    case FamilyTag::andrews_q_catalan: return even_part_compress(cf_chebU(2 * nl));
    case FamilyTag::q_central_binomial: return even_part_compress(cf_chebT(2 * nl));
    default: return std::nullopt;
  }
}

/// The aerated polynomial P_n in closed form, where one is displayed.
inline std::optional<XPolynomial> closed_aerated_poly(const FamilyId& id, std::size_t n) {
  switch (id.tag) {
    case FamilyTag::andrews_q_catalan: return cf_chebU(static_cast<long>(n));
    case FamilyTag::q_central_binomial: return cf_chebT(static_cast<long>(n));
    default: return std::nullopt;
  }
}

/// Closed expansion coefficients a(n, k), where known.
inline std::optional<QRational> closed_triangle(const FamilyId& id, std::size_t n, std::size_t k) {
  const long nl = static_cast<long>(n), kl = static_cast<long>(k);
  switch (id.tag) {
    case FamilyTag::geometric_q:
      // q^{binom(n,2) - binom(k,2)} [n,k]
      return QRational(QPolynomial::monomial(static_cast<std::size_t>(binom2(nl) - binom2(kl))) *
                       q_binomial(nl, kl));
    case FamilyTag::q_factorial:
      // [n+m]!/[m+k]! [n,k]
      return QRational::normalize(q_factorial(nl + id.m) * q_binomial(nl, kl), q_factorial(id.m + kl));
    case FamilyTag::q_double_factorial:
      // [n,k]_{q^2} [2n-1]!!/[2k-1]!!
      return QRational::normalize(q_binomial(nl, kl, QBase(2)) * q_double_factorial(nl, Parity::odd),
                                  q_double_factorial(kl, Parity::odd));
    default: return std::nullopt;
  }
}

/// Everything the verification engine knows about one family.
struct MomentFamily {
  FamilyId id;
  MomentSequence moments;

  bool aerated_capable() const { return has_closed_T(id); }
};

inline MomentFamily make_family(const FamilyId& id) {
  return {id, MomentSequence([id](std::size_t n) { return family_moment(id, n); })};
}

inline MomentSequence aerated_moments(const FamilyId& id) {
  return MomentSequence([id](std::size_t n) { return aerated_moment(id, n); });
}

/// P_n: aerated polynomial from the closed T when available, otherwise from
/// Stieltjes on the aerated moments (which must produce s = 0 throughout).
inline XPolynomial aerated_orthopoly(const FamilyId& id, std::size_t n) {
  std::vector<QRational> T;
  if (has_closed_T(id)) {
    for (std::size_t k = 0; k + 1 < n; ++k) T.push_back(closed_T(id, k));
  } else if (n >= 2) {
    T = symmetric_T(aerated_moments(id), n - 1);
  }
  return symmetric_polys(T, n).back();
}

/// Families exercised by "verify all" with their default depths.
inline std::vector<std::pair<FamilyId, std::size_t>> registry(std::size_t max_n) {
  const std::size_t reduced = std::min<std::size_t>(max_n, 6);
  std::vector<std::pair<FamilyId, std::size_t>> out;
  out.emplace_back(FamilyId::geometric(), max_n);
  for (long m = 0; m <= 3; ++m) out.emplace_back(FamilyId::q_factorial(m), max_n);
  for (long r = 1; r <= 3; ++r)
    for (long m = 0; m <= 2; ++m) out.emplace_back(FamilyId::multifactorial(r, m), r >= 2 ? reduced : max_n);
  out.emplace_back(FamilyId::double_factorial(), max_n);
  out.emplace_back(FamilyId::andrews_catalan(), reduced);
  out.emplace_back(FamilyId::central_binomial(), reduced);
  out.emplace_back(FamilyId::fibonacci(), reduced);
  out.emplace_back(FamilyId::lucas(), reduced);
  return out;
}

}  // namespace qortho
