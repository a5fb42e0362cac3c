#pragma once

#include "qortho/qrational.hpp"

#include <random>
#include <vector>

namespace qortho::rnd {

// Small random polynomials for property tests. Fixed seeds keep runs
// reproducible.
inline QPolynomial random_qpoly(std::mt19937& rng, int max_degree = 4, int max_coeff = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree), c(-max_coeff, max_coeff), d(1, 3);
  std::vector<RationalNumber> v(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : v) x = RationalNumber(c(rng), d(rng));
  return QPolynomial(v);
}

inline QPolynomial random_nonzero_qpoly(std::mt19937& rng, int max_degree = 4) {
  for (;;) {
    QPolynomial p = random_qpoly(rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

inline QRational random_qrat(std::mt19937& rng) {
  return QRational::normalize(random_qpoly(rng, 3), random_nonzero_qpoly(rng, 3));
}

}  // namespace qortho::rnd
