#pragma once

#include <random>
#include <vector>

#include "pfu/exact/ratfunc.hpp"

namespace pfu::testing {

/// Deterministic generator of small random exact data.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int h = 9) {
    int n = integer(-h, h);
    int d = integer(1, h);
    return Rational(n, d);
  }
  Rational nonzero_rational(int h = 9) {
    Rational r;
    do r = rational(h);
    while (r.is_zero());
    return r;
  }

  Polynomial poly(int degree, int h = 9) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rational(h));
    c.back() = nonzero_rational(h);
    return Polynomial(std::move(c));
  }

  /// Product of random linear factors (x - a_i) with small integer roots.
  Polynomial split_poly(int degree, int range = 4) {
    Polynomial p(Rational(1));
    for (int i = 0; i < degree; ++i) p = p * Polynomial{Rational(-integer(-range, range)), Rational(1)};
    return p;
  }

  RationalFunction ratfunc(int num_deg, int den_deg, int h = 9) {
    return RationalFunction(poly(num_deg, h), poly(den_deg, h));
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace pfu::testing
