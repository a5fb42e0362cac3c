#pragma once

// Human-readable and LaTeX renderings. Neither is meant to be parsed back;
// use serialize.hpp for that.

#include "qortho/xpolynomial.hpp"

#include <string>
#include <vector>

namespace qortho {

enum class Style { text, latex };

namespace detail {

inline std::string rational_text(const RationalNumber& r, Style style) {
  if (r.get_den() == 1) return r.get_num().get_str();
  if (style == Style::latex) {
    std::string s = sgn(r) < 0 ? "-" : "";
    return s + "\\frac{" + Integer(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
  }
  return r.get_str();
}

inline std::string power_text(const char* var, std::size_t k, Style style) {
  if (k == 0) return "";
  if (k == 1) return var;
  if (style == Style::latex) return std::string(var) + "^{" + std::to_string(k) + "}";
  return std::string(var) + "^" + std::to_string(k);
}

// Joins signed terms into "a + b - c".
inline std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, body] = terms[i];
    if (i == 0)
      out += negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
  }
  return out;
}

// A coefficient times a power, with unit coefficients suppressed.
inline std::string scaled_power(const RationalNumber& magnitude, const std::string& power, Style style) {
  if (power.empty()) return rational_text(magnitude, style);
  if (magnitude == 1) return power;
  if (magnitude.get_den() == 1 || style == Style::latex) return rational_text(magnitude, style) + power;
  return "(" + rational_text(magnitude, style) + ")" + power;
}

}  // namespace detail

/// Ascending in q, e.g. "1 + q + 2q^2".
inline std::string format(const QPolynomial& p, Style style = Style::text) {
  std::vector<std::pair<bool, std::string>> terms;
  const auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    terms.emplace_back(sgn(c[k]) < 0, detail::scaled_power(abs(c[k]), detail::power_text("q", k, style), style));
  }
  return detail::join_terms(terms);
}

inline std::string format(const QRational& r, Style style = Style::text) {
  if (r.is_polynomial()) return format(r.num(), style);
  if (style == Style::latex) return "\\frac{" + format(r.num(), style) + "}{" + format(r.den(), style) + "}";
  auto wrap = [](const QPolynomial& p, std::string s) {
    std::size_t terms = 0;
    for (const auto& c : p.coefficients()) terms += sgn(c) != 0;
    return terms == 1 ? s : "(" + s + ")";
  };
  return wrap(r.num(), format(r.num(), style)) + "/" + wrap(r.den(), format(r.den(), style));
}

/// Descending in x, e.g. "x^2 - (1 + q)x + q".
inline std::string format(const XPolynomial& p, Style style = Style::text) {
  std::vector<std::pair<bool, std::string>> terms;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const std::string power = detail::power_text("x", k, style);
    if (c[k].is_constant()) {
      const RationalNumber v = c[k].constant_value();
      terms.emplace_back(sgn(v) < 0, detail::scaled_power(abs(v), power, style));
      continue;
    }
    std::string body = format(c[k], style);
    if (style == Style::latex)
      body = "\\left(" + body + "\\right)";
    else
      body = "(" + body + ")";
    terms.emplace_back(false, body + power);
  }
  return detail::join_terms(terms);
}

}  // namespace qortho
