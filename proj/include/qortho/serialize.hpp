#pragma once

// JSON encoding used by the CLI's "qortho/1" documents.
//
//   RationalNumber  "num/den" (decimal, denominator always present)
//   QPolynomial     ascending array of RationalNumber
//   QRational       {"num": QPolynomial, "den": QPolynomial}
//   XPolynomial     ascending array of QRational

#include "qortho/xpolynomial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qortho {

inline constexpr const char* kSchemaVersion = "qortho/1";

inline nlohmann::json to_json(const RationalNumber& r) { return to_fraction_string(r); }

inline nlohmann::json to_json(const QPolynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

inline nlohmann::json to_json(const QRational& r) {
  return {{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

inline nlohmann::json to_json(const XPolynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

inline nlohmann::json to_json(const std::vector<QRational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

inline RationalNumber rational_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

inline QPolynomial qpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  std::vector<RationalNumber> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return QPolynomial(c);
}

inline QRational qrat_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational function must be {num, den}");
  return QRational::normalize(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

inline XPolynomial xpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("x-polynomial must be an array");
  std::vector<QRational> c;
  for (const auto& e : j) c.push_back(qrat_from_json(e));
  return XPolynomial(std::move(c));
}

inline std::vector<QRational> qrat_vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("sequence must be an array");
  std::vector<QRational> v;
  for (const auto& e : j) v.push_back(qrat_from_json(e));
  return v;
}

}  // namespace qortho
