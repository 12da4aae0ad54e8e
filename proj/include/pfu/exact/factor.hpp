#pragma once

// Factorization of univariate polynomials over Q.
//
// Squarefree parts are factored over Z by the Zassenhaus scheme with a
// single prime p chosen above twice the Mignotte bound, so no Hensel lifting
// is needed: the modular factors are obtained by distinct-degree and
// Cantor-Zassenhaus equal-degree splitting, then recombined by trial
// division. Intended for the small degrees that occur in operator analysis.

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "pfu/exact/poly.hpp"
#include "pfu/exact/poly_gcd.hpp"

namespace pfu {

namespace detail::modp {

using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline mpz_class mod(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

inline ZPoly reduce(ZPoly a, const mpz_class& p) {
  for (auto& c : a) c = mod(c, p);
  trim(a);
  return a;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    mpz_class x = i < a.size() ? a[i] : mpz_class(0);
    if (i < b.size()) x -= b[i];
    r[i] = mod(x, p);
  }
  trim(r);
  return r;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r), p);
}

inline mpz_class inverse(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

inline std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b, const mpz_class& p) {
  if (deg(a) < deg(b)) return {{}, a};
  mpz_class inv = inverse(b.back(), p);
  ZPoly q(a.size() - b.size() + 1, 0);
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    mpz_class c = mod(a[k + deg(b)] * inv, p);
    q[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= deg(b); ++j) a[k + j] = mod(a[k + j] - c * b[j], p);
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

inline ZPoly monic(ZPoly a, const mpz_class& p) {
  if (a.empty()) return a;
  mpz_class inv = inverse(a.back(), p);
  for (auto& c : a) c = mod(c * inv, p);
  return a;
}

inline ZPoly gcd(ZPoly a, ZPoly b, const mpz_class& p) {
  while (!b.empty()) {
    ZPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

inline ZPoly powmod(ZPoly base, const mpz_class& e, const ZPoly& f, const mpz_class& p) {
  ZPoly result{1};
  base = divmod(std::move(base), f, p).second;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = divmod(mul(result, result, p), f, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(mul(result, base, p), f, p).second;
  }
  return result;
}

/// Distinct-degree factorization of a monic squarefree f.
inline std::vector<std::pair<ZPoly, int>> distinct_degree(ZPoly f, const mpz_class& p) {
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly x{0, 1};
  ZPoly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = powmod(h, p, f, p);
    ZPoly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      out.emplace_back(g, i);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

/// Cantor-Zassenhaus splitting of a product of irreducibles of degree d.
inline void equal_degree(const ZPoly& g, int d, const mpz_class& p, gmp_randclass& rng,
                         std::vector<ZPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  mpz_class e = (pd - 1) / 2;
  for (;;) {
    ZPoly a(static_cast<size_t>(deg(g)));
    for (auto& c : a) c = rng.get_z_range(p);
    trim(a);
    if (deg(a) < 1) continue;
    ZPoly t = gcd(a, g, p);
    if (deg(t) <= 0) {
      ZPoly b = powmod(a, e, g, p);
      t = gcd(sub(b, ZPoly{1}, p), g, p);
    }
    if (deg(t) > 0 && deg(t) < deg(g)) {
      equal_degree(t, d, p, rng, out);
      equal_degree(divmod(g, t, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace detail::modp

namespace detail {

inline modp::ZPoly to_zpoly(const Polynomial& f) {
  modp::ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(c.num());
  return z;
}

inline Polynomial from_zpoly(const modp::ZPoly& z) {
  std::vector<Rational> v;
  for (const auto& c : z) v.emplace_back(c);
  return Polynomial(std::move(v));
}

/// Factors a primitive squarefree integer polynomial of positive degree into
/// primitive irreducible factors.
inline std::vector<Polynomial> factor_squarefree_integer(const Polynomial& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  if (n == 2) {
    Rational disc = f[1] * f[1] - Rational(4) * f[2] * f[0];
    if (!disc.is_square()) return {f};
  }
  // Mignotte: coefficients of lc(f) * g for g | f are bounded by
  // |lc| * 2^n * ||f||_2.
  mpz_class sumsq = 0;
  for (const auto& c : f.coeffs()) sumsq += c.num() * c.num();
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), sumsq.get_mpz_t());
  norm += 1;
  mpz_class lc = abs(f.leading().num());
  mpz_class bound = lc * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));

  modp::ZPoly fz = to_zpoly(f);
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), bound.get_mpz_t());
  for (;;) {
    if (modp::mod(f.leading().num(), p) != 0) {
      modp::ZPoly fm = modp::reduce(fz, p);
      modp::ZPoly dfm;
      for (size_t i = 1; i < fm.size(); ++i) dfm.push_back(modp::mod(fm[i] * static_cast<long>(i), p));
      modp::trim(dfm);
      if (modp::deg(modp::gcd(fm, dfm, p)) == 0) break;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240611UL);
  modp::ZPoly fm = modp::monic(modp::reduce(fz, p), p);
  std::vector<modp::ZPoly> modular;
  for (auto& [g, d] : modp::distinct_degree(fm, p)) modp::equal_degree(g, d, p, rng, modular);
  if (modular.size() == 1) return {f};

  mpz_class half = p / 2;
  auto symmetric = [&](modp::ZPoly z) {
    for (auto& c : z)
      if (c > half) c -= p;
    return z;
  };

  std::vector<Polynomial> found;
  Polynomial rest = f;
  std::vector<modp::ZPoly> pool = std::move(modular);
  int s = 1;
  while (2 * s <= static_cast<int>(pool.size())) {
    bool hit = false;
    std::vector<int> idx(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) idx[i] = i;
    const int r = static_cast<int>(pool.size());
    for (;;) {
      modp::ZPoly g{modp::mod(rest.leading().num(), p)};
      for (int i : idx) g = modp::mul(g, pool[i], p);
      Polynomial cand = primitive_part(from_zpoly(symmetric(g))).second;
      if (cand.degree() > 0 && (rest[0].is_zero() || !cand[0].is_zero())) {
        bool const_ok = cand[0].is_zero() || (rest[0] / cand[0]).is_integer();
        if (const_ok) {
          auto [q, rem] = rest.divmod(cand);
          if (rem.is_zero()) {
            found.push_back(cand);
            rest = primitive_part(q).second;
            std::vector<modp::ZPoly> next;
            for (int i = 0; i < r; ++i)
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
            pool = std::move(next);
            hit = true;
            break;
          }
        }
      }
      // next combination
      int k = s - 1;
      while (k >= 0 && idx[k] == r - s + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

}  // namespace detail

/// Display order of monic factors: by degree, then by the coefficients
/// below the leading one, compared from the top by absolute value with
/// negative values first. Linear factors x - r thus sort by |r|, positive
/// roots first: x, x - 1, x + 1, x - 27.
inline bool factor_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree() - 1; i >= 0; --i) {
    Rational x = a[i].abs(), y = b[i].abs();
    if (x != y) return x < y;
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct Factorization {
  Rational leading;
  /// Monic irreducible factors with multiplicities, canonically ordered.
  std::vector<std::pair<Polynomial, int>> factors;
};

/// Complete factorization over Q: p = leading * prod f^m.
inline Factorization factor(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("factorization of zero");
  Factorization out{p.leading(), {}};
  for (const auto& [sq, mult] : squarefree_decomposition(p)) {
    Polynomial prim = primitive_part(sq).second;
    for (const auto& g : detail::factor_squarefree_integer(prim)) out.factors.emplace_back(g.monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
  return out;
}

/// Squarefree factorization with each squarefree part split into
/// Q-irreducible factors. The product of factor^multiplicity equals p up to
/// its leading coefficient.
inline std::vector<std::pair<Polynomial, int>> squarefree_factor(const Polynomial& p) {
  return factor(p).factors;
}

/// Irreducible factors without multiplicities.
inline std::vector<Polynomial> irreducible_factors(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  for (auto& [f, m] : factor(p).factors) out.push_back(f);
  return out;
}

inline bool is_irreducible(const Polynomial& p) {
  if (p.degree() <= 0) return false;
  auto f = factor(p).factors;
  return f.size() == 1 && f[0].second == 1;
}

}  // namespace pfu
