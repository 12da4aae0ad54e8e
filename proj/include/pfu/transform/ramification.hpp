#pragma once

// Fibers and ramification of a rational map R = N/D : P^1 -> P^1.

#include <algorithm>
#include <vector>

#include "pfu/exact/algebraic.hpp"
#include "pfu/exact/factor.hpp"
#include "pfu/exact/ratfunc.hpp"

namespace pfu {

struct FiberPoint {
  AlgebraicPoint point = AlgebraicPoint::infinity();
  /// Ramification index e (local degree).
  int ramification = 1;
};

inline AlgebraicPoint point_of(const Polynomial& irreducible) {
  if (irreducible.degree() == 1) return AlgebraicPoint::rational(-irreducible[0] / irreducible[1]);
  return AlgebraicPoint::root_of(irreducible);
}

namespace detail {

/// Polynomial whose roots are the finite preimages of a finite value:
/// N - cD for rational c, D^d m(N/D) for a value of degree d.
inline Polynomial fiber_polynomial(const RationalFunction& R, const AlgebraicPoint& value) {
  const Polynomial& n = R.num();
  const Polynomial& d = R.den();
  if (value.is_rational()) return n - d * value.value();
  const Polynomial& m = value.modulus();
  Polynomial acc;
  for (int i = 0; i <= m.degree(); ++i) acc += n.pow(i) * d.pow(m.degree() - i) * m[i];
  return acc;
}

}  // namespace detail

/// R(infinity) as a point of P^1.
inline AlgebraicPoint value_at_infinity(const RationalFunction& R) {
  if (R.num().degree() > R.den().degree()) return AlgebraicPoint::infinity();
  return AlgebraicPoint::rational(R.value_at_infinity());
}

/// All preimages of `value` with their ramification indices.
inline std::vector<FiberPoint> fiber(const RationalFunction& R, const AlgebraicPoint& value) {
  if (R.is_constant()) throw ConstantMap("fiber of a constant map");
  const int d = R.map_degree();
  std::vector<FiberPoint> out;
  Polynomial poly = value.is_infinity() ? R.den() : detail::fiber_polynomial(R, value);
  if (poly.degree() > 0)
    for (const auto& [f, m] : factor(poly).factors) out.push_back({point_of(f), m});
  if (value_at_infinity(R) == value) {
    int e = value.is_infinity() ? R.num().degree() - R.den().degree() : d - poly.degree();
    out.push_back({AlgebraicPoint::infinity(), e});
  }
  return out;
}

/// Ramification index of R at a point.
inline int ramification_at(const RationalFunction& R, const AlgebraicPoint& z) {
  if (R.is_constant()) throw ConstantMap("ramification of a constant map");
  if (z.is_infinity()) {
    const int d = R.map_degree();
    if (R.num().degree() > R.den().degree()) return R.num().degree() - R.den().degree();
    return d - (R.num() - R.den() * R.value_at_infinity()).degree();
  }
  int pole = multiplicity(z.modulus(), R.den());
  if (pole > 0) return pole;
  // Away from poles, ord(R - R(z)) = ord(R') + 1.
  Polynomial w = R.num().derivative() * R.den() - R.num() * R.den().derivative();
  return multiplicity(z.modulus(), w) + 1;
}

/// Points where R ramifies over values outside `special`, with indices.
inline std::vector<FiberPoint> extra_ramification(const RationalFunction& R, const std::vector<AlgebraicPoint>& special) {
  if (R.is_constant()) throw ConstantMap("ramification of a constant map");
  std::vector<FiberPoint> out;
  std::vector<Polynomial> special_polys;
  bool infinity_special = false;
  for (const auto& v : special) {
    if (v.is_infinity()) {
      infinity_special = true;
      special_polys.push_back(R.den());
    } else {
      special_polys.push_back(detail::fiber_polynomial(R, v));
    }
  }
  Polynomial w = R.num().derivative() * R.den() - R.num() * R.den().derivative();
  if (w.degree() > 0) {
    for (const auto& [h, mult] : factor(w).factors) {
      bool over_special = false;
      for (const auto& sp : special_polys) over_special = over_special || (sp.degree() >= 0 && (sp % h).is_zero());
      if (!over_special) out.push_back({point_of(h), mult + 1});
    }
  }
  AlgebraicPoint vinf = value_at_infinity(R);
  bool inf_special = vinf.is_infinity() ? infinity_special
                                        : std::find(special.begin(), special.end(), vinf) != special.end();
  if (!inf_special) {
    int e = ramification_at(R, AlgebraicPoint::infinity());
    if (e > 1) out.push_back({AlgebraicPoint::infinity(), e});
  }
  return out;
}

/// 2 deg R - 2 minus the ramification counted over the given values.
inline int riemann_hurwitz_defect(const RationalFunction& R, const std::vector<AlgebraicPoint>& values) {
  int total = 2 * R.map_degree() - 2;
  for (const auto& v : values)
    for (const auto& fp : fiber(R, v)) total -= (fp.ramification - 1) * fp.point.degree();
  return total;
}

}  // namespace pfu
