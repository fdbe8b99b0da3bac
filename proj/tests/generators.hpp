#pragma once

// Seeded random ring elements for property tests.

#include <random>

#include "skeinrec/scalar.hpp"

namespace gen {

using skeinrec::Exponents;
using skeinrec::LaurentPoly;
using skeinrec::Scalar;

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms), expo(-2, 2), coef(-5, 5);
  LaurentPoly p;
  for (int i = terms(rng); i > 0; --i) {
    Exponents e{};
    for (auto& x : e) x = expo(rng);
    p += LaurentPoly::monomial(e, coef(rng));
  }
  return p;
}

inline Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> k(0, 2);
  return Scalar(random_poly(rng), k(rng));
}

// +- a monomial: a valid substitution image.
inline LaurentPoly random_unit(std::mt19937& rng) {
  std::uniform_int_distribution<int> expo(-2, 2), sign(0, 1);
  Exponents e{};
  for (auto& x : e) x = expo(rng);
  return LaurentPoly::monomial(e, sign(rng) ? 1 : -1);
}

}  // namespace gen
