#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfu/elliptic/kodaira.hpp"
#include "pfu/transform/pullback.hpp"
#include "pfu/transform/system.hpp"
#include "pfu/uniformize/uniformize.hpp"

namespace pfu {

/// y^2 = 4x^3 - g2 x - g3 over the base coordinate.
struct WeierstrassModel {
  RationalFunction g2;
  RationalFunction g3;
};

/// f'' + (36x^2 - 41x + 32)/(144x^2(x-1)^2) f, uniformizing PSL(2, Z) on the J-line.
inline LinearODE lambda_operator() {
  Polynomial x = Polynomial::x();
  Polynomial x1 = x - Polynomial(Rational(1));
  RationalFunction q(Polynomial{Rational(32), Rational(-41), Rational(36)}, x * x * x1 * x1 * Rational(144));
  return LinearODE({RationalFunction(), q});
}

/// g2^3 - 27 g3^2.
inline RationalFunction discriminant(const WeierstrassModel& w) {
  RationalFunction d = w.g2.pow(3) - w.g3 * w.g3 * Rational(27);
  if (d.is_zero()) throw IdenticallySingular("discriminant vanishes identically");
  return d;
}

/// 3 g3 g2' - 2 g2 g3'.
inline RationalFunction delta_aux(const WeierstrassModel& w) {
  return w.g3 * w.g2.derivative() * Rational(3) - w.g2 * w.g3.derivative() * Rational(2);
}

/// g2^3 / (g2^3 - 27 g3^2); 0 where g2 = 0 and 1 where g3 = 0.
inline RationalFunction functional_invariant(const WeierstrassModel& w) {
  return w.g2.pow(3) / discriminant(w);
}

/// The Gauss-Manin system for (eta1, eta2).
inline Matrix griffiths_matrix(const WeierstrassModel& w) {
  RationalFunction d = discriminant(w);
  RationalFunction dd = d.derivative() / (d * Rational(12));
  RationalFunction delta = delta_aux(w);
  return {{-dd, delta * Rational(3, 2) / d}, {-(w.g2 * delta) / (d * Rational(8)), dd}};
}

/// Picard-Fuchs operator of eta1.
inline LinearODE griffiths_pf(const WeierstrassModel& w) {
  RationalFunction delta = delta_aux(w);
  if (delta.is_zero()) {
    if (functional_invariant(w).is_constant()) throw ConstantJ("functional invariant is constant");
    throw ContractViolation("delta vanishes for a nonconstant functional invariant");
  }
  LinearODE L = system_to_scalar(griffiths_matrix(w), 0);
  if (L.order() != 2) throw ContractViolation("Griffiths system is not cyclic in eta1");
  return L;
}

/// pnf2 of the pullback of the uniformizing operator along J.
inline LinearODE lambda_J(const RationalFunction& J) { return pnf2(pullback2(lambda_operator(), J)); }

namespace detail {

inline constexpr int kInfiniteValuation = kExact;

inline int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

enum class JClass { Pole, Zero, One, Other };

inline JClass j_class(const RationalFunction& J, const AlgebraicPoint& at) {
  int v = valuation_at(J, at);
  if (v < 0) return JClass::Pole;
  if (v > 0) return JClass::Zero;
  if (valuation_at(J - RationalFunction(1), at) > 0) return JClass::One;
  return JClass::Other;
}

}  // namespace detail

/// Valuations (v(g2), v(g3), v(Delta)) of the locally minimal model.
struct MinimalValuations {
  int g2 = 0;
  int g3 = 0;
  int discriminant = 0;
};

inline MinimalValuations minimal_valuations(const WeierstrassModel& w, const AlgebraicPoint& at) {
  using detail::kInfiniteValuation;
  RationalFunction d = discriminant(w);
  int v2 = valuation_at(w.g2, at);
  int v3 = valuation_at(w.g3, at);
  // Smallest twist exponent k with v2 + 4k >= 0 and v3 + 6k >= 0; it is
  // then minimal, since at k - 1 one valuation is negative.
  int k = INT_MIN;
  if (v2 != kInfiniteValuation) k = std::max(k, detail::ceil_div(-v2, 4));
  if (v3 != kInfiniteValuation) k = std::max(k, detail::ceil_div(-v3, 6));
  MinimalValuations m;
  m.g2 = v2 == kInfiniteValuation ? kInfiniteValuation : v2 + 4 * k;
  m.g3 = v3 == kInfiniteValuation ? kInfiniteValuation : v3 + 6 * k;
  m.discriminant = valuation_at(d, at) + 12 * k;
  return m;
}

/// Kodaira type at a point: the J-value class fixes the pair
/// {unstarred, starred}, the minimal v(Delta) picks one.
inline KodairaFiber kodaira_type(const WeierstrassModel& w, const AlgebraicPoint& at) {
  using K = KodairaFiber::Kind;
  RationalFunction J = functional_invariant(w);
  MinimalValuations m = minimal_valuations(w, at);
  const int vd = m.discriminant;
  auto fail = [&]() -> KodairaFiber {
    throw ContractViolation("inconsistent minimal model at " + at.str() + " (v(Delta) = " + std::to_string(vd) + ")");
  };
  switch (detail::j_class(J, at)) {
    case detail::JClass::Pole: {
      int n = -valuation_at(J, at);
      if (vd == n) return KodairaFiber::I(n);
      if (vd == n + 6) return KodairaFiber::IStar(n);
      return fail();
    }
    case detail::JClass::Zero:
      if (vd == 0) return KodairaFiber::I(0);
      if (vd == 2) return K::II;
      if (vd == 4) return K::IV;
      if (vd == 6) return KodairaFiber::IStar(0);
      if (vd == 8) return K::IVStar;
      if (vd == 10) return K::IIStar;
      return fail();
    case detail::JClass::One:
      if (vd == 0) return KodairaFiber::I(0);
      if (vd == 3) return K::III;
      if (vd == 6) return KodairaFiber::IStar(0);
      if (vd == 9) return K::IIIStar;
      return fail();
    case detail::JClass::Other:
      if (vd == 0) return KodairaFiber::I(0);
      if (vd == 6) return KodairaFiber::IStar(0);
      return fail();
  }
  return fail();
}

/// Singular fibers in canonical point order.
inline std::vector<std::pair<AlgebraicPoint, KodairaFiber>> census(const WeierstrassModel& w) {
  RationalFunction d = discriminant(w);
  std::vector<AlgebraicPoint> candidates;
  for (const Polynomial* p : {&d.num(), &d.den(), &w.g2.den(), &w.g3.den()})
    for (const auto& f : irreducible_factors(*p)) {
      AlgebraicPoint pt = point_of(f);
      if (std::find(candidates.begin(), candidates.end(), pt) == candidates.end()) candidates.push_back(pt);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.push_back(AlgebraicPoint::infinity());
  std::vector<std::pair<AlgebraicPoint, KodairaFiber>> out;
  for (const auto& p : candidates) {
    KodairaFiber f = kodaira_type(w, p);
    if (!f.is_smooth()) out.emplace_back(p, f);
  }
  return out;
}

struct EllipticModularityReport {
  RationalFunction J;
  int degree = 0;
  /// Fibers of J over 0, 1 and infinity.
  std::vector<FiberPoint> zeros, ones, poles;
  /// Points violating the multiplicity conditions over 0 and 1.
  std::vector<PointFailure> order_failures;
  int riemann_hurwitz_defect = 0;
  std::vector<FiberPoint> extra_ramification;
  std::vector<SingularPointReport> lambda_points;
  std::vector<AlgebraicPoint> apparent;
  /// Present when a Weierstrass model was given.
  std::optional<std::vector<std::pair<AlgebraicPoint, KodairaFiber>>> fibers;
  std::vector<AlgebraicPoint> forbidden_fibers;
  bool order_conditions = false;
  bool modular = false;
};

/// Modularity verdict from the functional invariant alone.
inline EllipticModularityReport check_elliptic_modularity(const RationalFunction& J) {
  if (J.is_constant()) throw ConstantJ("functional invariant is constant");
  EllipticModularityReport r;
  r.J = J;
  r.degree = J.map_degree();
  const auto zero = AlgebraicPoint::rational(0), one = AlgebraicPoint::rational(1), inf = AlgebraicPoint::infinity();
  r.zeros = fiber(J, zero);
  r.ones = fiber(J, one);
  r.poles = fiber(J, inf);
  for (const auto& fp : r.zeros)
    if (fp.ramification != 1 && fp.ramification % 3 != 0)
      r.order_failures.push_back({fp.point, "zero of J of order " + std::to_string(fp.ramification)});
  for (const auto& fp : r.ones)
    if (fp.ramification != 1 && fp.ramification % 2 != 0)
      r.order_failures.push_back({fp.point, "J = 1 to order " + std::to_string(fp.ramification)});
  r.riemann_hurwitz_defect = riemann_hurwitz_defect(J, {zero, one, inf});
  r.extra_ramification = extra_ramification(J, {zero, one, inf});
  r.lambda_points = analyze(lambda_J(J));
  for (const auto& p : r.lambda_points)
    if (p.classification == PointType::Apparent) r.apparent.push_back(p.location);
  r.order_conditions = r.order_failures.empty();
  r.modular = r.order_conditions && r.apparent.empty();
  return r;
}

/// Modularity verdict for a Weierstrass model, with its fiber census.
inline EllipticModularityReport check_elliptic_modularity(const WeierstrassModel& w) {
  EllipticModularityReport r = check_elliptic_modularity(functional_invariant(w));
  r.fibers = census(w);
  for (const auto& [p, f] : *r.fibers)
    if (is_forbidden_fiber(f)) r.forbidden_fibers.push_back(p);
  r.modular = r.modular && r.forbidden_fibers.empty();
  return r;
}

}  // namespace pfu
