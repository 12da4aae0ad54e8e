#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "pfu/exact/poly.hpp"

namespace pfu {

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0(F(Rational(1))), s1;
  Poly<F> t0, t1(F(Rational(1)));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    Poly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(Rational(1)) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) { return gcd(a, b); }

/// Integer content scaling: returns (c, q) with p = c * q, q primitive with
/// integer coefficients and positive leading coefficient.
inline std::pair<Rational, Polynomial> primitive_part(const Polynomial& p) {
  if (p.is_zero()) return {Rational(0), Polynomial()};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    den_lcm = integer_lcm(den_lcm, c.den());
    num_gcd = integer_gcd(num_gcd, c.num());
  }
  Rational content(num_gcd, den_lcm);
  if (p.leading().sign() < 0) content = -content;
  return {content, p * content.inverse()};
}

/// Yun's algorithm: p = lc * prod f_i^i with f_i monic, squarefree and
/// pairwise coprime. Entries with f_i = 1 are omitted.
inline std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero");
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial f = p.monic();
  if (f.degree() == 0) return out;
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = f / a;
  Polynomial c = df / a;
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Multiplicity of the irreducible factor m in p (p nonzero).
inline int multiplicity(const Polynomial& m, Polynomial p) {
  if (p.is_zero()) throw ZeroPolynomial("multiplicity in zero polynomial");
  int k = 0;
  for (;;) {
    auto [q, r] = p.divmod(m);
    if (!r.is_zero()) return k;
    p = std::move(q);
    ++k;
  }
}

}  // namespace pfu
