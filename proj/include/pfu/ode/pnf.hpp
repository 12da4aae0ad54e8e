#pragma once

#include "pfu/ode/linear_ode.hpp"

namespace pfu {

/// f'' + Q f with Q = P2 - P1'/2 - P1^2/4.
inline LinearODE pnf2(const LinearODE& L) {
  if (L.order() != 2) throw OrderMismatch("pnf2 needs an order-2 operator");
  const auto& p1 = L.coeff(1);
  if (p1.is_zero()) return L;
  RationalFunction q = L.coeff(2) - p1.derivative() * Rational(1, 2) - p1 * p1 * Rational(1, 4);
  return LinearODE({RationalFunction(), q});
}

/// f''' + R2 f' + R3 f from the gauge f = g exp(-int P1/3):
/// R2 = P2 - P1' - P1^2/3, R3 = P3 - P1 P2/3 - P1''/3 + 2 P1^3/27.
inline LinearODE pnf3(const LinearODE& L) {
  if (L.order() != 3) throw OrderMismatch("pnf3 needs an order-3 operator");
  const auto& p1 = L.coeff(1);
  if (p1.is_zero()) return L;
  const auto& p2 = L.coeff(2);
  RationalFunction d1 = p1.derivative();
  RationalFunction r2 = p2 - d1 - p1 * p1 * Rational(1, 3);
  RationalFunction r3 = L.coeff(3) - p1 * p2 * Rational(1, 3) - d1.derivative() * Rational(1, 3) +
                        p1 * p1 * p1 * Rational(2, 27);
  return LinearODE({RationalFunction(), r2, r3});
}

/// Projective normal form for orders 2 and 3.
inline LinearODE pnf(const LinearODE& L) {
  if (L.order() == 2) return pnf2(L);
  if (L.order() == 3) return pnf3(L);
  throw OrderMismatch("projective normal form is implemented for orders 2 and 3");
}

inline bool is_pnf(const LinearODE& L) { return L.coeff(1).is_zero(); }

}  // namespace pfu
