#pragma once

// Laurent expansion of rational functions at closed points of P^1.

#include <vector>

#include "pfu/exact/algebraic.hpp"
#include "pfu/exact/ratfunc.hpp"
#include "pfu/series/power_series.hpp"

namespace pfu {

using LocalSeries = PowerSeries<Residue>;

inline Poly<Residue> lift(const Polynomial& p) {
  std::vector<Residue> v(p.coeffs().begin(), p.coeffs().end());
  return Poly<Residue>(std::move(v));
}

/// p(alpha + u) as a polynomial in u over the residue field of `at`.
inline Poly<Residue> taylor_shift(const Polynomial& p, const AlgebraicPoint& at, const Residue::Modulus& field) {
  Poly<Residue> shift{at.generator(field), Residue(1)};
  return lift(p).compose(shift);
}

/// Expansion of f in the local parameter (x - a), or 1/x at infinity, with
/// absolute truncation order `precision`. The zero function gives the exact
/// zero series.
inline LocalSeries local_series(const RationalFunction& f, const AlgebraicPoint& at, int precision) {
  if (f.is_zero()) return LocalSeries();
  LocalSeries num, den;
  if (at.is_infinity()) {
    int dn = f.num().degree(), dd = f.den().degree();
    num = LocalSeries::from_poly(lift(f.num().reversed(dn)));
    den = LocalSeries::from_poly(lift(f.den().reversed(dd))).shift(dn - dd);
  } else {
    auto field = at.field();
    num = LocalSeries::from_poly(taylor_shift(f.num(), at, field));
    den = LocalSeries::from_poly(taylor_shift(f.den(), at, field));
  }
  if (den.last_exponent() == den.valuation() && num.is_exact()) {
    // Monomial denominator: the quotient is a Laurent polynomial.
    Residue inv = den.leading().inverse();
    return (num * inv).shift(-den.valuation()).truncate(precision);
  }
  return num.truncate(precision + den.valuation()) / den;
}

/// Coefficients through u^order inclusive.
inline LocalSeries laurent_expand(const RationalFunction& f, const AlgebraicPoint& at, int order) {
  return local_series(f, at, order + 1);
}

/// Valuation of f at a point (kExact for f = 0).
inline int valuation_at(const RationalFunction& f, const AlgebraicPoint& at) {
  if (f.is_zero()) return kExact;
  if (at.is_infinity()) return f.valuation_at_infinity();
  return f.valuation(at.modulus());
}

/// Coefficient-wise restriction of a series with rational coefficients.
inline QSeries to_rational(const LocalSeries& s) {
  std::vector<Rational> c;
  for (const auto& e : s.stored()) c.push_back(e.rational_value());
  return QSeries(s.valuation(), std::move(c), s.precision());
}

inline LocalSeries to_local(const QSeries& s) {
  std::vector<Residue> c(s.stored().begin(), s.stored().end());
  return LocalSeries(s.valuation(), std::move(c), s.precision());
}

}  // namespace pfu
