#pragma once

#include <string>
#include <vector>

#include "pfu/exact/algebraic.hpp"
#include "pfu/exact/factor.hpp"

namespace pfu {

/// A characteristic exponent: an element of the residue field, or
/// base +/- sqrt(radicand) with the radicand not a known square.
class ExponentValue {
 public:
  ExponentValue() = default;
  ExponentValue(Residue v) : base_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  /// base + sign * sqrt(radicand), folded when the radicand is a rational square.
  static ExponentValue quadratic(const Residue& base, const Residue& radicand, int sign) {
    ExponentValue e;
    if (radicand.is_zero()) {
      e.base_ = base;
      return e;
    }
    Rational root;
    if (radicand.is_rational() && radicand.rational_value().is_square(&root)) {
      e.base_ = base + Residue(sign > 0 ? root : -root);
      return e;
    }
    e.base_ = base;
    e.radicand_ = radicand;
    e.sign_ = sign > 0 ? 1 : -1;
    return e;
  }

  bool is_exact() const { return radicand_.is_zero(); }
  bool is_rational() const { return is_exact() && base_.is_rational(); }
  /// The value when exact, otherwise the rational-part base.
  const Residue& base() const { return base_; }
  const Residue& radicand() const { return radicand_; }
  int sign() const { return sign_; }
  Rational rational() const { return base_.rational_value(); }

  ExponentValue operator-() const {
    ExponentValue e = *this;
    e.base_ = -e.base_;
    e.sign_ = -e.sign_;
    return e;
  }

  friend bool operator==(const ExponentValue& a, const ExponentValue& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.base_ == b.base_;
    return a.base_ == b.base_ && a.radicand_ == b.radicand_ && a.sign_ == b.sign_;
  }

  std::string str(const std::string& symbol = "a") const {
    if (is_exact()) return base_.str(symbol);
    std::string s = base_.is_zero() ? (sign_ < 0 ? "-" : "") : base_.str(symbol) + (sign_ < 0 ? " - " : " + ");
    return s + "sqrt(" + radicand_.str(symbol) + ")";
  }

 private:
  Residue base_;
  Residue radicand_;
  int sign_ = 1;
};

/// Roots, with multiplicity, of a monic polynomial over a residue field,
/// restricted to the field itself and quadratic extensions of it. Throws
/// UnsupportedExponentField otherwise.
inline std::vector<ExponentValue> field_roots(const Poly<Residue>& poly) {
  Poly<Residue> p = poly.monic();
  const int k = p.degree();
  std::vector<ExponentValue> out;
  if (k <= 0) return out;
  bool rational = true;
  for (const auto& c : p.coeffs()) rational = rational && c.is_rational();
  if (k == 1) return {ExponentValue(-p[0])};
  if (k == 2) {
    Residue half_b = p[1] * Residue(Rational(1, 2));
    Residue rad = half_b * half_b - p[0];
    out.push_back(ExponentValue::quadratic(-half_b, rad, -1));
    out.push_back(ExponentValue::quadratic(-half_b, rad, 1));
    return out;
  }
  if (rational) {
    std::vector<Rational> q;
    for (const auto& c : p.coeffs()) q.push_back(c.rational_value());
    for (const auto& [f, m] : factor(Polynomial(q)).factors) {
      std::vector<ExponentValue> roots;
      if (f.degree() == 1) {
        roots.emplace_back(Residue(-f[0]));
      } else if (f.degree() == 2) {
        Rational hb = f[1] / Rational(2);
        Residue rad(hb * hb - f[0]);
        roots.push_back(ExponentValue::quadratic(Residue(-hb), rad, -1));
        roots.push_back(ExponentValue::quadratic(Residue(-hb), rad, 1));
      } else {
        throw UnsupportedExponentField("indicial factor of degree " + std::to_string(f.degree()));
      }
      for (int i = 0; i < m; ++i) out.insert(out.end(), roots.begin(), roots.end());
    }
    return out;
  }
  if (k == 3) {
    // Depressed cubic around the mean root m: s^3 + a s + b.
    Residue m = -(p[2] * Residue(Rational(1, 3)));
    Poly<Residue> d = p.compose(Poly<Residue>{m, Residue(1)});
    if (d[0].is_zero()) {
      out.emplace_back(m);
      out.push_back(ExponentValue::quadratic(m, -d[1], -1));
      out.push_back(ExponentValue::quadratic(m, -d[1], 1));
      return out;
    }
  }
  throw UnsupportedExponentField("indicial roots outside the supported fields");
}

}  // namespace pfu
