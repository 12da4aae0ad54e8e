#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pfu/ode/analysis.hpp"
#include "pfu/transform/ramification.hpp"

namespace pfu {

/// Weight marker for a cusp.
inline constexpr int kCusp = 0;

struct SignatureEntry {
  AlgebraicPoint location = AlgebraicPoint::infinity();
  /// Integer >= 2, or kCusp.
  int weight = kCusp;

  std::string weight_str() const { return weight == kCusp ? "inf" : std::to_string(weight); }
  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

class OrbifoldSignature {
 public:
  OrbifoldSignature() = default;
  explicit OrbifoldSignature(std::vector<SignatureEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_)
      if (e.weight != kCusp && e.weight < 2) throw InputError("orbifold weights must be at least 2");
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.location < b.location; });
    for (size_t i = 1; i < entries_.size(); ++i)
      if (entries_[i].location == entries_[i - 1].location)
        throw SignatureValueCollision("two signature entries at " + entries_[i].location.str());
  }

  const std::vector<SignatureEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < entries_.size(); ++i)
      s += (i ? ", (" : "(") + entries_[i].location.str() + ", " + entries_[i].weight_str() + ")";
    return s + "}";
  }

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;

 private:
  std::vector<SignatureEntry> entries_;
};

struct PointFailure {
  AlgebraicPoint location = AlgebraicPoint::infinity();
  std::string reason;
};

struct UniformizationReport {
  /// Exponent-difference criterion at every singular point.
  bool pass = false;
  /// Additionally no APPARENT point anywhere.
  bool strict_pass = false;
  OrbifoldSignature signature;
  std::vector<SingularPointReport> points;
  std::vector<PointFailure> failures;
};

/// Decides whether a PNF order-2 operator uniformizes an orbifold: each
/// singular point must have difference 0 (cusp) or 1/b (weight b); points
/// resolved as ORDINARY are skipped.
inline UniformizationReport uniformization_check(const LinearODE& L) {
  if (L.order() != 2 || !is_pnf(L)) throw NotPNF("uniformization check needs an order-2 operator in normal form");
  if (!is_fuchsian(L)) throw NotFuchsian("operator has an irregular singular point");
  UniformizationReport rep;
  rep.points = analyze(L);
  std::vector<SignatureEntry> entries;
  bool apparent = false;
  for (const auto& p : rep.points) {
    const auto& d = p.exponent_difference;
    switch (p.classification) {
      case PointType::Ordinary:
        break;
      case PointType::Orbifold:
        entries.push_back({p.location, p.orbifold_weight});
        break;
      case PointType::Logarithmic:
        if (d && d->is_rational() && d->rational().is_zero()) {
          entries.push_back({p.location, kCusp});
        } else {
          rep.failures.push_back({p.location, "logarithmic point with exponent difference " + d->str()});
        }
        break;
      case PointType::Apparent:
        apparent = true;
        rep.failures.push_back({p.location, "apparent singularity, exponent difference " + d->str()});
        break;
      case PointType::Generic:
        rep.failures.push_back({p.location, "exponent difference " + d->str() + " is not 0 or 1/b"});
        break;
    }
  }
  rep.pass = rep.failures.empty();
  rep.strict_pass = rep.pass && !apparent;
  if (rep.pass) rep.signature = OrbifoldSignature(std::move(entries));
  return rep;
}

struct SignaturePrediction {
  bool pass = false;
  OrbifoldSignature signature;
  std::vector<PointFailure> failures;
};

/// Signature of the pullback of an orbifold along R, predicted from the
/// ramification of R alone: a preimage of a weight-b point with index r has
/// weight b/r when r | b (dropping out at weight 1), and fails otherwise.
inline SignaturePrediction signature_of_pullback(const OrbifoldSignature& source, const RationalFunction& R) {
  if (R.is_constant()) throw ConstantMap("pullback along a constant map");
  SignaturePrediction out;
  std::vector<SignatureEntry> entries;
  std::vector<AlgebraicPoint> values;
  for (const auto& e : source.entries()) {
    values.push_back(e.location);
    for (const auto& fp : fiber(R, e.location)) {
      const int r = fp.ramification;
      if (e.weight == kCusp) {
        entries.push_back({fp.point, kCusp});
      } else if (e.weight % r == 0) {
        if (e.weight / r > 1) entries.push_back({fp.point, e.weight / r});
      } else if (r % e.weight == 0) {
        out.failures.push_back({fp.point, "apparent singularity, exponent difference " +
                                              std::to_string(r / e.weight)});
      } else {
        Rational d(r, e.weight);
        out.failures.push_back({fp.point, "exponent difference " + d.str() + " is not 0 or 1/b"});
      }
    }
  }
  for (const auto& fp : extra_ramification(R, values))
    out.failures.push_back({fp.point, "apparent singularity, exponent difference " + std::to_string(fp.ramification)});
  std::sort(out.failures.begin(), out.failures.end(),
            [](const auto& a, const auto& b) { return a.location < b.location; });
  out.pass = out.failures.empty();
  if (out.pass) out.signature = OrbifoldSignature(std::move(entries));
  return out;
}

}  // namespace pfu
