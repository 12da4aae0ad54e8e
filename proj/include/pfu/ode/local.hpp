#pragma once

// Local form of an operator at a point. With u the local parameter
// (x - a, or 1/x at infinity) and theta = u d/du,
//   u^k L = sum_m u^m g_m(theta),
// where g_m collects the u^m coefficients of u^i P_i against the falling
// factorials theta (theta - 1) ... (theta - k + i + 1). g_0 is the indicial
// polynomial in the local parameter.

#include <algorithm>
#include <string>
#include <vector>

#include "pfu/exact/local_expansion.hpp"
#include "pfu/ode/exponents.hpp"
#include "pfu/ode/linear_ode.hpp"

namespace pfu {

/// The operator rewritten in the parameter t = 1/x.
inline LinearODE at_infinity(const LinearODE& L) {
  return change_variable(L, RationalFunction(Polynomial(Rational(1)), Polynomial::x()));
}

/// Pole orders of P_i at a point are at most i.
inline bool fuchsian_at(const LinearODE& L, const AlgebraicPoint& at) {
  if (at.is_infinity()) return fuchsian_at(at_infinity(L), AlgebraicPoint::rational(0));
  for (int i = 1; i <= L.order(); ++i) {
    const auto& p = L.coeff(i);
    if (!p.is_zero() && p.valuation(at.modulus()) < -i) return false;
  }
  return true;
}

inline Poly<Residue> falling_factorial(int j) {
  Poly<Residue> r(Residue(1));
  for (int l = 0; l < j; ++l) r = r * Poly<Residue>{Residue(-l), Residue(1)};
  return r;
}

class LocalOperator {
 public:
  /// Local data with `terms` theta-polynomials g_0 .. g_{terms-1}.
  LocalOperator(const LinearODE& L, const AlgebraicPoint& at, int terms)
      : point_(at), order_(L.order()) {
    if (at.is_infinity()) {
      init(at_infinity(L), AlgebraicPoint::rational(0), nullptr, terms);
    } else {
      init(L, at, at.field(), terms);
    }
  }

  const AlgebraicPoint& point() const { return point_; }
  const Residue::Modulus& field() const { return field_; }
  int order() const { return order_; }
  int terms() const { return static_cast<int>(g_.size()); }
  const Poly<Residue>& g(int m) const { return g_.at(static_cast<size_t>(m)); }

  /// Indicial polynomial in the local parameter.
  const Poly<Residue>& indicial_local() const { return g_.front(); }

 private:
  void init(const LinearODE& L, const AlgebraicPoint& at, Residue::Modulus field, int terms) {
    if (!fuchsian_at(L, at)) throw NotFuchsian("irregular singular point at " + point_.str());
    field_ = std::move(field);
    const int k = order_;
    std::vector<LocalSeries> shifted;
    for (int i = 0; i <= k; ++i) {
      if (i == 0) {
        shifted.push_back(LocalSeries::constant(Residue(1)));
      } else {
        shifted.push_back(local_series(L.coeff(i), at, terms - i).shift(i));
      }
    }
    std::vector<Poly<Residue>> falling;
    for (int j = 0; j <= k; ++j) falling.push_back(falling_factorial(j));
    for (int m = 0; m < terms; ++m) {
      Poly<Residue> gm;
      for (int i = 0; i <= k; ++i) {
        if (shifted[i].is_zero() || m < shifted[i].valuation()) continue;
        if (m > shifted[i].last_exponent()) continue;
        Residue c = shifted[i].coeff(m);
        if (!c.is_zero()) gm += falling[k - i] * c;
      }
      g_.push_back(std::move(gm));
    }
  }

  AlgebraicPoint point_;
  Residue::Modulus field_;
  int order_;
  std::vector<Poly<Residue>> g_;
};

/// Indicial polynomial at a point. At infinity it is reported in the growth
/// variable rho (solutions behave like x^rho), i.e. g_0(-rho) made monic.
inline Poly<Residue> indicial(const LinearODE& L, const AlgebraicPoint& at) {
  LocalOperator local(L, at, 1);
  Poly<Residue> g0 = local.indicial_local();
  if (!at.is_infinity()) return g0;
  return g0.compose(Poly<Residue>{Residue(0), Residue(-1)}).monic();
}

/// Characteristic exponents (with multiplicity) in the reporting convention.
inline std::vector<ExponentValue> exponents(const LinearODE& L, const AlgebraicPoint& at) {
  return field_roots(indicial(L, at));
}

/// Exponents in the local parameter (t-exponents at infinity).
inline std::vector<ExponentValue> local_exponents(const LocalOperator& local) {
  return field_roots(local.indicial_local());
}

}  // namespace pfu
