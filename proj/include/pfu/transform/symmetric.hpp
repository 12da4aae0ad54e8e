#pragma once

#include "pfu/ode/pnf.hpp"
#include "pfu/transform/system.hpp"

namespace pfu {

/// f''' + 3 P1 f'' + (2 P1^2 + 4 P2 + P1') f' + (4 P1 P2 + 2 P2') f.
inline LinearODE sym2(const LinearODE& L) {
  if (L.order() != 2) throw OrderMismatch("sym2 needs an order-2 operator");
  const auto& p1 = L.coeff(1);
  const auto& p2 = L.coeff(2);
  return LinearODE({p1 * Rational(3), p1 * p1 * Rational(2) + p2 * Rational(4) + p1.derivative(),
                    p1 * p2 * Rational(4) + p2.derivative() * Rational(2)});
}

/// Lee's (n+1) x (n+1) system for the n-th symmetric power; 1-based
/// entries a(k,k) = (1-k) P1, a(k,k+1) = n+1-k, a(k+1,k) = -k P2.
inline Matrix sym_power_system(const LinearODE& L, int n) {
  if (L.order() != 2) throw OrderMismatch("symmetric power system needs an order-2 operator");
  if (n < 1) throw InputError("symmetric power must be at least 1");
  Matrix a(static_cast<size_t>(n) + 1, std::vector<RationalFunction>(static_cast<size_t>(n) + 1));
  for (int k = 1; k <= n + 1; ++k) {
    a[k - 1][k - 1] = L.coeff(1) * Rational(1 - k);
    if (k <= n) {
      a[k - 1][k] = RationalFunction(n + 1 - k);
      a[k][k - 1] = L.coeff(2) * Rational(-k);
    }
  }
  return a;
}

/// The PNF square root f'' + (R2/4) f of an order-3 operator whose normal
/// form f''' + R2 f' + R3 f has R3 = R2'/2.
inline LinearODE sym2_root(const LinearODE& L) {
  if (L.order() != 3) throw OrderMismatch("sym2_root needs an order-3 operator");
  LinearODE n = pnf3(L);
  const auto& r2 = n.coeff(2);
  if (n.coeff(3) != r2.derivative() * Rational(1, 2))
    throw NotSymmetricSquare("normal form violates R3 = R2'/2");
  return LinearODE({RationalFunction(), r2 * Rational(1, 4)});
}

inline bool is_symmetric_square(const LinearODE& L) {
  if (L.order() != 3) return false;
  LinearODE n = pnf3(L);
  return n.coeff(3) == n.coeff(2).derivative() * Rational(1, 2);
}

}  // namespace pfu
