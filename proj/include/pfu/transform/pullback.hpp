#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pfu/ode/analysis.hpp"
#include "pfu/transform/ramification.hpp"

namespace pfu {

/// Operator for f(R(z)) when f solves the order-2 operator L:
/// f'' + (P1(R) R' - R''/R') f' + P2(R) R'^2 f.
inline LinearODE pullback2(const LinearODE& L, const RationalFunction& R) {
  if (L.order() != 2) throw OrderMismatch("pullback2 needs an order-2 operator");
  RationalFunction d1 = R.derivative();
  if (d1.is_zero()) throw ConstantMap("pullback along a constant map");
  RationalFunction d2 = d1.derivative();
  RationalFunction p1 = L.coeff(1).compose(R) * d1 - d2 / d1;
  RationalFunction p2 = L.coeff(2).compose(R) * d1 * d1;
  return LinearODE({p1, p2});
}

struct PullbackPointReport {
  AlgebraicPoint point = AlgebraicPoint::infinity();
  /// R(point); empty when it is not a rational value or infinity.
  std::optional<AlgebraicPoint> image;
  int ramification = 1;
  /// r times the source difference; 1 over a regular value.
  Rational predicted_difference;
  /// Combinatorial prediction: LOGARITHMIC, ORBIFOLD, GENERIC or APPARENT.
  PointType predicted = PointType::Generic;
  /// Decision of the obstruction test on the pulled-back operator, made
  /// whenever the predicted difference is a positive integer.
  std::optional<PointType> resolved;
  int orbifold_weight = 0;
  bool extra_ramification = false;

  PointType classification() const { return resolved.value_or(predicted); }
  std::string label() const {
    PointType t = classification();
    if (t == PointType::Orbifold) return "ORBIFOLD(" + std::to_string(orbifold_weight) + ")";
    return to_string(t);
  }
};

/// Predicted local type of each singular point of pullback2(L, R).
/// Source points must have difference 0 or 1/b.
inline std::vector<PullbackPointReport> classify_pullback(const LinearODE& L, const RationalFunction& R) {
  if (R.is_constant()) throw ConstantMap("pullback along a constant map");
  std::vector<PullbackPointReport> out;
  std::vector<AlgebraicPoint> values;
  LinearODE pulled = pnf2(pullback2(L, R));

  auto resolve = [&](PullbackPointReport& rep) {
    const Rational& d = rep.predicted_difference;
    if (d.is_integer() && d.sign() > 0) rep.resolved = analyze_point(pulled, rep.point).classification;
  };

  for (const auto& src : analyze(L)) {
    Rational diff;
    if (src.classification == PointType::Logarithmic && src.exponent_difference &&
        src.exponent_difference->is_rational() && src.exponent_difference->rational().is_zero()) {
      diff = Rational(0);
    } else if (src.classification == PointType::Orbifold) {
      diff = Rational(1, src.orbifold_weight);
    } else {
      throw UnclassifiedSourcePoint("source point " + src.location.str() + " is " + src.label());
    }
    values.push_back(src.location);
    for (const auto& fp : fiber(R, src.location)) {
      PullbackPointReport rep;
      rep.point = fp.point;
      rep.image = src.location;
      rep.ramification = fp.ramification;
      rep.predicted_difference = diff * Rational(fp.ramification);
      const Rational& d = rep.predicted_difference;
      if (d.is_zero()) {
        rep.predicted = PointType::Logarithmic;
      } else if (d.is_integer()) {
        rep.predicted = PointType::Apparent;
      } else if (d.num() == 1) {
        rep.predicted = PointType::Orbifold;
        rep.orbifold_weight = static_cast<int>(d.den().get_si());
      } else {
        rep.predicted = PointType::Generic;
      }
      resolve(rep);
      out.push_back(std::move(rep));
    }
  }
  for (const auto& fp : extra_ramification(R, values)) {
    PullbackPointReport rep;
    rep.point = fp.point;
    if (fp.point.is_infinity()) {
      rep.image = value_at_infinity(R);
    } else if (fp.point.is_rational()) {
      Rational a = fp.point.value();
      rep.image = R.den().eval(a).is_zero() ? AlgebraicPoint::infinity() : AlgebraicPoint::rational(R.eval(a));
    }
    rep.ramification = fp.ramification;
    rep.predicted_difference = Rational(fp.ramification);
    rep.predicted = PointType::Apparent;
    rep.extra_ramification = true;
    resolve(rep);
    out.push_back(std::move(rep));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  return out;
}

}  // namespace pfu
