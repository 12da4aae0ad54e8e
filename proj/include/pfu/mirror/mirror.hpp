#pragma once

// Mirror maps at points of maximal unipotent monodromy. With the point moved
// to t = 0, the Frobenius pair f (f(0) = 1) and f log t + g (g(0) = 0) gives
// q = t exp(g/f), and the mirror map is the reversion t(q).

#include <string>
#include <vector>

#include "pfu/ode/analysis.hpp"
#include "pfu/series/power_series.hpp"

namespace pfu {

/// Singular points that pass the MUM test.
inline std::vector<AlgebraicPoint> find_mum_points(const LinearODE& L) {
  std::vector<AlgebraicPoint> out;
  for (const auto& p : singular_points(L))
    if (mum_check(L, p)) out.push_back(p);
  return out;
}

struct MirrorMap {
  /// Original coordinate in terms of the local coordinate t at the point.
  RationalFunction coordinate;
  /// q as a series in t.
  QSeries q_of_t;
  /// t as a series in q: the mirror map.
  QSeries series;
};

/// Mirror map through q^terms at a rational or infinite MUM point, in the
/// local coordinate t with x = 1/(scale t) at infinity and x = a + scale t
/// at a finite point a.
inline MirrorMap mirror_map(const LinearODE& L, const AlgebraicPoint& mum, int terms,
                            const Rational& scale = Rational(1)) {
  if (scale.is_zero()) throw InputError("coordinate scale must be nonzero");
  if (terms < 1) throw InputError("mirror map needs at least one term");
  if (!mum.is_infinity() && !mum.is_rational())
    throw UnsupportedLocation("MUM point " + mum.str() + " is not rational");
  if (L.order() < 2 || !mum_check(L, mum)) throw NotMUM(mum.str() + " is not a point of maximal unipotent monodromy");

  MirrorMap out;
  RationalFunction t = RationalFunction::x() * scale;
  out.coordinate = mum.is_infinity() ? RationalFunction(1) / t : t + RationalFunction(mum.value());
  LinearODE local = change_variable(L, out.coordinate);
  auto basis = frobenius_basis(local, AlgebraicPoint::rational(0), terms + 1);

  const LogSolution* hol = nullptr;
  const LogSolution* log1 = nullptr;
  for (const auto& s : basis.solutions) {
    if (s.log_degree() == 0 && !hol) hol = &s;
    if (s.log_degree() == 1 && !log1) log1 = &s;
  }
  if (!hol || !log1) throw ContractViolation("MUM point without a holomorphic/logarithmic pair");
  // log1 = t^rho (G0 + G1 log t) with G1 a multiple of the holomorphic series.
  QSeries g0 = to_rational(log1->log_terms[0]);
  QSeries g1 = to_rational(log1->log_terms[1]);
  QSeries h = g0 / g1;
  h = h - QSeries::constant(h.coeff(0), h.precision());
  out.q_of_t = QSeries::variable() * exp(h);
  out.series = revert(out.q_of_t).truncate(terms + 1);
  return out;
}

/// 1/z(q) + c.
inline QSeries reciprocal_plus_constant(const QSeries& zq, const Rational& c) {
  if (zq.is_zero() || zq.valuation() != 1) throw BadValuation("mirror map must have valuation 1");
  return zq.inverse() + QSeries::constant(c);
}

}  // namespace pfu
