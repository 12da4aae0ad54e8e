#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pfu/ode/frobenius.hpp"
#include "pfu/ode/local.hpp"
#include "pfu/ode/pnf.hpp"

namespace pfu {

enum class PointType { Ordinary, Apparent, Logarithmic, Orbifold, Generic };

inline std::string to_string(PointType t) {
  switch (t) {
    case PointType::Ordinary: return "ORDINARY";
    case PointType::Apparent: return "APPARENT";
    case PointType::Logarithmic: return "LOGARITHMIC";
    case PointType::Orbifold: return "ORBIFOLD";
    case PointType::Generic: return "GENERIC";
  }
  return "?";
}

struct SingularPointReport {
  AlgebraicPoint location = AlgebraicPoint::infinity();
  /// Indicial polynomial; at infinity in the growth variable.
  Poly<Residue> indicial;
  std::vector<ExponentValue> exponents;
  /// Order 2 only: the nonnegative square root of the squared difference.
  std::optional<ExponentValue> exponent_difference;
  PointType classification = PointType::Generic;
  /// b for ORBIFOLD(b), 0 otherwise.
  int orbifold_weight = 0;
  bool log_obstruction_checked = false;
  bool has_log = false;

  std::string label() const {
    if (classification == PointType::Orbifold) return "ORBIFOLD(" + std::to_string(orbifold_weight) + ")";
    return to_string(classification);
  }
};

/// Finite singular points: irreducible factors of the coefficient denominators.
inline std::vector<AlgebraicPoint> finite_singular_points(const LinearODE& L) {
  std::vector<AlgebraicPoint> out;
  for (const auto& p : L.coeffs()) {
    for (const auto& f : irreducible_factors(p.den())) {
      AlgebraicPoint pt = f.degree() == 1 ? AlgebraicPoint::rational(-f[0]) : AlgebraicPoint::root_of(f);
      if (std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(pt);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct FuchsianReport {
  bool fuchsian = true;
  /// Every finite pole and infinity with its local verdict.
  std::vector<std::pair<AlgebraicPoint, bool>> points;
};

inline FuchsianReport fuchsian_check(const LinearODE& L) {
  FuchsianReport r;
  auto pts = finite_singular_points(L);
  pts.push_back(AlgebraicPoint::infinity());
  for (const auto& p : pts) {
    bool ok = fuchsian_at(L, p);
    r.points.emplace_back(p, ok);
    r.fuchsian = r.fuchsian && ok;
  }
  return r;
}

inline bool is_fuchsian(const LinearODE& L) { return fuchsian_check(L).fuchsian; }

/// The projective normal form has no pole at the point.
inline bool pnf_regular_at(const LinearODE& L, const AlgebraicPoint& at) {
  if (L.order() != 2 && L.order() != 3) return false;
  if (at.is_infinity()) return pnf_regular_at(at_infinity(L), AlgebraicPoint::rational(0));
  LinearODE n = pnf(L);
  for (const auto& p : n.coeffs())
    if (!p.is_zero() && p.valuation(at.modulus()) < 0) return false;
  return true;
}

namespace detail {

inline bool rational_difference(const ExponentValue& a, const ExponentValue& b, Rational* d) {
  if (!a.is_exact() || !b.is_exact()) return false;
  Residue diff = a.base() - b.base();
  if (!diff.is_rational()) return false;
  *d = diff.rational_value();
  return true;
}

inline void sort_exponents(std::vector<ExponentValue>& e) {
  bool all_rational = std::all_of(e.begin(), e.end(), [](const auto& v) { return v.is_rational(); });
  if (all_rational)
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.rational() < b.rational(); });
}

/// Logarithm test by explicit Frobenius computation through offset `reach`.
inline bool frobenius_has_log(const LinearODE& L, const AlgebraicPoint& at, int reach) {
  int terms = std::max(reach + 1, 2);
  return frobenius_basis(L, at, terms).has_log();
}

inline void classify_integer_class(const LinearODE& L, const AlgebraicPoint& at, int max_offset, bool consecutive,
                                   SingularPointReport& r) {
  r.has_log = frobenius_has_log(L, at, max_offset);
  r.log_obstruction_checked = true;
  if (max_offset == 0 || r.has_log) {
    r.classification = PointType::Logarithmic;
  } else if (consecutive && pnf_regular_at(L, at)) {
    r.classification = PointType::Ordinary;
  } else {
    r.classification = PointType::Apparent;
  }
}

}  // namespace detail

/// Full local report at a point (singular or not).
inline SingularPointReport analyze_point(const LinearODE& L, const AlgebraicPoint& at) {
  SingularPointReport r;
  r.location = at;
  r.indicial = indicial(L, at);
  const int k = L.order();
  if (k == 2) {
    Residue half_b = r.indicial[1] * Residue(Rational(1, 2));
    Residue disc = (half_b * half_b - r.indicial[0]) * Residue(4);
    r.exponents = field_roots(r.indicial);
    detail::sort_exponents(r.exponents);
    r.exponent_difference = ExponentValue::quadratic(Residue(0), disc, 1);
    const auto& d = *r.exponent_difference;
    if (!d.is_rational()) {
      r.classification = PointType::Generic;
      return r;
    }
    Rational diff = d.rational();
    if (diff.is_integer()) {
      detail::classify_integer_class(L, at, static_cast<int>(diff.to_long()), diff == Rational(1), r);
    } else if (diff.num() == 1) {
      r.classification = PointType::Orbifold;
      r.orbifold_weight = static_cast<int>(diff.den().get_si());
    } else {
      r.classification = PointType::Generic;
    }
    return r;
  }
  try {
    r.exponents = field_roots(r.indicial);
  } catch (const UnsupportedExponentField&) {
    r.classification = PointType::Generic;
    return r;
  }
  detail::sort_exponents(r.exponents);
  // Differences from the first exponent; all must be rational to go further.
  std::vector<Rational> offs;
  for (const auto& e : r.exponents) {
    Rational d;
    if (!detail::rational_difference(e, r.exponents.front(), &d)) {
      r.classification = PointType::Generic;
      return r;
    }
    offs.push_back(d);
  }
  Rational lo = *std::min_element(offs.begin(), offs.end());
  for (auto& o : offs) o -= lo;
  std::sort(offs.begin(), offs.end());
  bool integral = std::all_of(offs.begin(), offs.end(), [](const Rational& o) { return o.is_integer(); });
  if (integral) {
    bool consecutive = true;
    for (size_t i = 0; i < offs.size(); ++i) consecutive = consecutive && offs[i] == Rational(static_cast<long>(i));
    detail::classify_integer_class(L, at, static_cast<int>(offs.back().to_long()), consecutive, r);
    return r;
  }
  Rational step = offs[1] - offs[0];
  bool progression = step.sign() > 0 && step.num() == 1;
  for (size_t i = 1; i < offs.size(); ++i) progression = progression && offs[i] - offs[i - 1] == step;
  if (progression) {
    r.classification = PointType::Orbifold;
    r.orbifold_weight = static_cast<int>(step.den().get_si());
  } else {
    r.classification = PointType::Generic;
  }
  return r;
}

/// Finite poles of the coefficients, plus infinity unless it is an ordinary
/// point of the operator; canonical order.
inline std::vector<AlgebraicPoint> singular_points(const LinearODE& L) {
  auto out = finite_singular_points(L);
  LinearODE Lt = at_infinity(L);
  bool pole = false;
  for (const auto& p : Lt.coeffs()) pole = pole || (!p.is_zero() && p.valuation(Polynomial::x()) < 0);
  if (pole) {
    auto inf = AlgebraicPoint::infinity();
    if (!fuchsian_at(L, inf) || analyze_point(L, inf).classification != PointType::Ordinary) out.push_back(inf);
  }
  return out;
}

/// Reports for every singular point; throws NotFuchsian for irregular points.
inline std::vector<SingularPointReport> analyze(const LinearODE& L) {
  std::vector<SingularPointReport> out;
  for (const auto& p : singular_points(L)) out.push_back(analyze_point(L, p));
  return out;
}

/// Decision at a point whose exponents differ by nonnegative integers.
inline PointType is_apparent(const LinearODE& L, const AlgebraicPoint& at) {
  auto r = analyze_point(L, at);
  if (!r.log_obstruction_checked) throw NotIntegerDifference("exponents at " + at.str() + " are not integer-spaced");
  return r.classification;
}

/// All exponents equal and a full log ladder log^0 .. log^(k-1).
inline bool mum_check(const LinearODE& L, const AlgebraicPoint& at) {
  std::vector<ExponentValue> e;
  try {
    e = exponents(L, at);
  } catch (const UnsupportedExponentField&) {
    return false;
  }
  if (!std::all_of(e.begin(), e.end(), [&](const auto& v) { return v.is_exact() && v == e.front(); })) return false;
  return frobenius_basis(L, at, 2).max_log_degree() == L.order() - 1;
}

}  // namespace pfu
