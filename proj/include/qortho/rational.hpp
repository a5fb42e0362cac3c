#pragma once

// The scalar ground field. GMP's mpq_class already keeps values in lowest
// terms with a positive denominator and represents zero as 0/1, which is
// exactly the invariant this library relies on.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qortho {

using RationalNumber = mpq_class;
using Integer = mpz_class;

/// Decimal "num/den" rendering; the denominator is always written.
inline std::string to_fraction_string(RationalNumber r) {
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "n", "-n" or "n/d" in decimal. Throws std::invalid_argument.
inline RationalNumber parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto check_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!check_int(num) || !check_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  RationalNumber r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace qortho
