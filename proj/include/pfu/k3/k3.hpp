#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pfu/series/power_series.hpp"
#include "pfu/transform/symmetric.hpp"
#include "pfu/uniformize/uniformize.hpp"

namespace pfu {

/// Second-order PNF operator whose symmetric square is the normal form of L.
inline LinearODE k3_pf_root(const LinearODE& L) {
  if (L.order() != 3) throw OrderMismatch("K3 Picard-Fuchs operators have order 3");
  return sym2_root(pnf3(L));
}

struct EllipticPoint {
  AlgebraicPoint value = AlgebraicPoint::infinity();
  int order = 2;
};

/// Orbifold data of a genus-zero Fricke group in its Hauptmodul coordinate.
class FrickeOrbifoldData {
 public:
  FrickeOrbifoldData(int n, std::vector<EllipticPoint> elliptic, std::vector<AlgebraicPoint> cusps)
      : n_(n), elliptic_(std::move(elliptic)), cusps_(std::move(cusps)) {
    if (n < 1) throw InputError("level must be positive");
    std::vector<AlgebraicPoint> seen;
    for (const auto& e : elliptic_) {
      if (e.order != 2 && e.order != 3 && e.order != 4 && e.order != 6)
        throw InputError("elliptic point order " + std::to_string(e.order) + " is not 2, 3, 4 or 6");
      seen.push_back(e.value);
    }
    seen.insert(seen.end(), cusps_.begin(), cusps_.end());
    std::sort(seen.begin(), seen.end());
    for (size_t i = 1; i < seen.size(); ++i)
      if (seen[i] == seen[i - 1]) throw SignatureValueCollision("two signature entries at " + seen[i].str());
  }

  int level() const { return n_; }
  const std::vector<EllipticPoint>& elliptic_points() const { return elliptic_; }
  const std::vector<AlgebraicPoint>& cusp_values() const { return cusps_; }

  OrbifoldSignature signature() const {
    std::vector<SignatureEntry> e;
    for (const auto& p : elliptic_) e.push_back({p.value, p.order});
    for (const auto& c : cusps_) e.push_back({c, kCusp});
    return OrbifoldSignature(std::move(e));
  }

 private:
  int n_;
  std::vector<EllipticPoint> elliptic_;
  std::vector<AlgebraicPoint> cusps_;
};

/// Admissible vanishing order r of H_n - p over an elliptic point of order b.
inline bool vanishing_order_admissible(int b, int r) { return r % b == 0 || b % r == 0; }

struct K3PointReport {
  AlgebraicPoint point = AlgebraicPoint::infinity();
  AlgebraicPoint value = AlgebraicPoint::infinity();
  /// Elliptic order b, or kCusp.
  int order = kCusp;
  int multiplicity = 1;
  bool admissible = true;
};

struct K3ModularityReport {
  std::vector<K3PointReport> points;
  std::vector<FiberPoint> extra_ramification;
  /// Uniformization of the square root of the supplied operator.
  std::optional<UniformizationReport> analytic;
  std::optional<bool> agreement;
  bool combinatorial = false;
  bool modular = false;
};

inline K3ModularityReport check_k3_modularity(const RationalFunction& hn, const FrickeOrbifoldData& orb,
                                              const std::optional<LinearODE>& L3 = std::nullopt) {
  if (hn.is_constant()) throw ConstantMap("Hauptmodul relation is constant");
  K3ModularityReport rep;
  std::vector<AlgebraicPoint> values;
  for (const auto& e : orb.elliptic_points()) {
    values.push_back(e.value);
    for (const auto& fp : fiber(hn, e.value))
      rep.points.push_back({fp.point, e.value, e.order, fp.ramification,
                            vanishing_order_admissible(e.order, fp.ramification)});
  }
  for (const auto& c : orb.cusp_values()) {
    values.push_back(c);
    for (const auto& fp : fiber(hn, c)) rep.points.push_back({fp.point, c, kCusp, fp.ramification, true});
  }
  std::sort(rep.points.begin(), rep.points.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  rep.extra_ramification = extra_ramification(hn, values);
  rep.combinatorial = rep.extra_ramification.empty() &&
                      std::all_of(rep.points.begin(), rep.points.end(), [](const auto& p) { return p.admissible; });
  rep.modular = rep.combinatorial;
  if (L3) {
    rep.analytic = uniformization_check(k3_pf_root(*L3));
    rep.agreement = rep.analytic->pass == rep.combinatorial;
    rep.modular = rep.modular && rep.analytic->pass;
  }
  return rep;
}

/// Leading term 1/q and integral coefficients.
inline bool hauptmodul_normalization_check(const QSeries& h) {
  if (h.is_zero() || h.valuation() != -1 || h.leading() != Rational(1)) return false;
  return std::all_of(h.stored().begin(), h.stored().end(), [](const Rational& c) { return c.is_integer(); });
}

/// Whether the rational function of the mirror map reproduces the q-series
/// through their common truncation.
inline bool mirror_vs_hauptmodul(const QSeries& zq, const QSeries& hn_q, const RationalFunction& hn) {
  if (zq.is_zero() || zq.valuation() != 1) throw BadValuation("mirror map must have valuation 1");
  QSeries lhs = compose(QSeries::from_poly(hn.num()), zq) / compose(QSeries::from_poly(hn.den()), zq);
  int prec = std::min(lhs.precision(), hn_q.precision());
  int low = std::min(lhs.is_zero() ? prec : lhs.valuation(), hn_q.is_zero() ? prec : hn_q.valuation());
  if (prec != kExact && prec - low < 3)
    throw TruncationTooShort("only " + std::to_string(prec - low) + " comparable coefficients");
  return lhs.truncate(prec) == hn_q.truncate(prec);
}

}  // namespace pfu
