#pragma once

#include <vector>

#include "altlab/polynomial.hpp"
#include "altlab/random.hpp"

namespace testing_helpers {

using altlab::Polynomial;
using altlab::Rational;

inline Rational random_rational(altlab::Rng& rng, long long range = 5) {
  return Rational(rng.uniform(-range, range)) / Rational(rng.nonzero(1, range));
}

inline Polynomial<Rational> random_poly(altlab::Rng& rng, int n, int terms = 4, int max_exp = 2) {
  Polynomial<Rational> p(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> xe(n), ye(n);
    for (int i = 0; i < n; ++i) {
      xe[i] = static_cast<int>(rng.uniform(0, max_exp));
      ye[i] = static_cast<int>(rng.uniform(0, max_exp));
    }
    p.add_term(altlab::Monomial(xe, ye), random_rational(rng));
  }
  return p;
}

inline std::vector<Rational> random_point(altlab::Rng& rng, int n, long long range = 7) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(random_rational(rng, range));
  return v;
}

}  // namespace testing_helpers
