#pragma once

// Dense univariate polynomials over Z, the workhorse underneath QPolynomial.
//
// Coefficients are ascending, the zero polynomial is the empty vector and a
// nonzero polynomial never has a zero leading coefficient. Large products and
// exact quotients go through Kronecker substitution so GMP's integer
// multiplication and division do the heavy lifting.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qortho::detail {

using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline std::size_t bit_length(const mpz_class& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline std::size_t max_bits(const ZPoly& p) {
  std::size_t b = 0;
  for (const auto& c : p) b = std::max(b, bit_length(c));
  return b;
}

inline std::size_t bits_of_count(std::size_t n) {
  std::size_t b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

inline ZPoly neg(ZPoly p) {
  for (auto& c : p) c = -c;
  return p;
}

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline ZPoly scale(ZPoly p, const mpz_class& s) {
  if (sgn(s) == 0) return {};
  for (auto& c : p) c *= s;
  return p;
}

// p * q^k
inline ZPoly shift(const ZPoly& p, std::size_t k) {
  if (p.empty() || k == 0) return p;
  ZPoly r(p.size() + k);
  for (std::size_t i = 0; i < p.size(); ++i) r[i + k] = p[i];
  return r;
}

inline std::size_t valuation(const ZPoly& p) {
  std::size_t v = 0;
  while (v < p.size() && sgn(p[v]) == 0) ++v;
  return v;
}

// Packs p into the integer sum p_i * 2^(64*limbs*i). Coefficients must satisfy
// |p_i| < 2^(64*limbs - 1) for unpack to recover them.
inline mpz_class pack(const ZPoly& p, std::size_t limbs) {
  const std::size_t n = p.size();
  std::vector<mp_limb_t> pos(n * limbs, 0), negs(n * limbs, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_srcptr z = p[i].get_mpz_t();
    const std::size_t sz = mpz_size(z);
    if (sz > limbs) throw std::logic_error("zpoly::pack: slot too narrow");
    const mp_limb_t* src = mpz_limbs_read(z);
    auto& dst = mpz_sgn(z) >= 0 ? pos : negs;
    if (mpz_sgn(z) < 0) any_neg = true;
    std::copy(src, src + sz, dst.begin() + static_cast<std::ptrdiff_t>(i * limbs));
  }
  mpz_class r;
  if (n) mpz_import(r.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
  if (any_neg) {
    mpz_class m;
    mpz_import(m.get_mpz_t(), negs.size(), -1, sizeof(mp_limb_t), 0, 0, negs.data());
    r -= m;
  }
  return r;
}

// Inverse of pack using balanced digits. Returns nullopt when v does not fit in
// `count` slots, which signals an unfaithful packing to the caller.
inline std::optional<ZPoly> unpack(const mpz_class& v, std::size_t limbs, std::size_t count) {
  const int s = sgn(v);
  mpz_class a = abs(v);
  std::size_t nlimbs = mpz_size(a.get_mpz_t());
  std::vector<mp_limb_t> buf(std::max(nlimbs, count * limbs) + 1, 0);
  if (nlimbs) {
    std::size_t written = 0;
    mpz_export(buf.data(), &written, -1, sizeof(mp_limb_t), 0, 0, a.get_mpz_t());
  }
  const std::size_t slot_bits = 64 * limbs;
  mpz_class half, full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, slot_bits);
  half = full / 2;
  ZPoly out(count);
  int carry = 0;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_class d;
    mpz_import(d.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
    d += carry;
    if (d >= half) {
      d -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = s < 0 ? mpz_class(-d) : d;
  }
  if (carry) return std::nullopt;
  for (std::size_t i = count * limbs; i < buf.size(); ++i)
    if (buf[i]) return std::nullopt;
  trim(out);
  return out;
}

inline std::size_t limbs_for_bits(std::size_t bits) { return bits / 64 + 1; }

inline ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1) return scale(b, a[0]);
  if (b.size() == 1) return scale(a, b[0]);
  if (std::min(a.size(), b.size()) < 12) return mul_schoolbook(a, b);
  const std::size_t bits =
      max_bits(a) + max_bits(b) + bits_of_count(std::min(a.size(), b.size())) + 1;
  const std::size_t limbs = limbs_for_bits(bits);
  const mpz_class prod = pack(a, limbs) * pack(b, limbs);
  auto r = unpack(prod, limbs, a.size() + b.size() - 1);
  if (!r) throw std::logic_error("zpoly::mul: packing overflow");
  return *r;
}

// Quotient a / b when b divides a in Z[q]; nullopt otherwise.
inline std::optional<ZPoly> try_divexact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  const std::size_t qlen = a.size() - b.size() + 1;
  if (b.size() == 1) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!mpz_divisible_p(a[i].get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
      mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), b[0].get_mpz_t());
    }
    return r;
  }
  // Cheap rejection on the leading and trailing coefficients.
  if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
  const std::size_t va = valuation(a), vb = valuation(b);
  if (va < vb || !mpz_divisible_p(a[va].get_mpz_t(), b[vb].get_mpz_t())) return std::nullopt;

  const std::size_t base_bits = std::max(max_bits(a), max_bits(b)) + 2;
  // First attempt assumes the quotient is no wider than the dividend; the
  // second uses a Mignotte-style bound and is conclusive.
  const std::size_t attempts[2] = {base_bits, base_bits + a.size() + bits_of_count(a.size())};
  for (std::size_t bits : attempts) {
    const std::size_t limbs = limbs_for_bits(bits);
    mpz_class qv, rv;
    mpz_tdiv_qr(qv.get_mpz_t(), rv.get_mpz_t(), pack(a, limbs).get_mpz_t(),
                pack(b, limbs).get_mpz_t());
    if (sgn(rv) != 0) {
      if (bits == attempts[1]) return std::nullopt;
      continue;
    }
    auto qp = unpack(qv, limbs, qlen);
    if (qp && mul(b, *qp) == a) return qp;
  }
  return std::nullopt;
}

inline ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  auto r = try_divexact(a, b);
  if (!r) throw std::logic_error("zpoly::divexact: inexact division");
  return *r;
}

inline mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive part with positive leading coefficient.
inline ZPoly primitive(ZPoly p) {
  if (p.empty()) return p;
  mpz_class g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
inline ZPoly prem(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const mpz_class la = a.back();
    const std::size_t shiftby = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shiftby] -= la * b[i];
    trim(a);
  }
  return a;
}

inline ZPoly gcd_prs(ZPoly a, ZPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Heuristic gcd by evaluation at a large power of two, after Char, Geddes and
// Gonnet. Inputs are primitive and of positive degree.
inline std::optional<ZPoly> gcd_heuristic(const ZPoly& a, const ZPoly& b) {
  std::size_t bits = std::max(max_bits(a), max_bits(b)) + 2;
  for (int attempt = 0; attempt < 4; ++attempt, bits = bits * 2 + 32) {
    const std::size_t limbs = limbs_for_bits(bits);
    const mpz_class va = pack(a, limbs), vb = pack(b, limbs);
    if (sgn(va) == 0 || sgn(vb) == 0) continue;
    mpz_class h;
    mpz_gcd(h.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    const std::size_t count = mpz_size(h.get_mpz_t()) / limbs + 2;
    auto cand = unpack(h, limbs, count);
    if (!cand || cand->empty()) continue;
    ZPoly g = primitive(std::move(*cand));
    if (g.size() == 1) return g;
    if (try_divexact(a, g) && try_divexact(b, g)) return g;
  }
  return std::nullopt;
}

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
inline ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  const std::size_t v = std::min(valuation(a), valuation(b));
  ZPoly pa = primitive(ZPoly(a.begin() + static_cast<std::ptrdiff_t>(valuation(a)), a.end()));
  ZPoly pb = primitive(ZPoly(b.begin() + static_cast<std::ptrdiff_t>(valuation(b)), b.end()));
  ZPoly g;
  if (pa.size() == 1 || pb.size() == 1) {
    g = ZPoly{1};
  } else if (pa == pb) {
    g = pa;
  } else if (pa.size() <= pb.size() && try_divexact(pb, pa)) {
    g = pa;
  } else if (pb.size() < pa.size() && try_divexact(pa, pb)) {
    g = pb;
  } else if (auto h = gcd_heuristic(pa, pb)) {
    g = std::move(*h);
  } else {
    g = gcd_prs(pa, pb);
  }
  return shift(g, v);
}

}  // namespace qortho::detail
