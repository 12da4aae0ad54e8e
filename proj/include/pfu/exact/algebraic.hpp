#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "pfu/exact/factor.hpp"
#include "pfu/exact/poly.hpp"
#include "pfu/exact/poly_gcd.hpp"

namespace pfu {

/// Element of the residue field Q[x]/(m) at an algebraic point, m monic and
/// irreducible. A null modulus means the element is a plain rational, which
/// mixes freely with elements of any residue field.
class Residue {
 public:
  using Modulus = std::shared_ptr<const Polynomial>;

  Residue() = default;
  Residue(const Rational& c) : value_(c) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Residue(T c) : value_(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Residue(Modulus modulus, const Polynomial& value) : modulus_(std::move(modulus)) {
    value_ = (modulus_ && value.degree() >= modulus_->degree()) ? value % *modulus_ : value;
    if (value_.degree() <= 0) modulus_.reset();
  }

  const Polynomial& value() const { return value_; }
  const Modulus& modulus() const { return modulus_; }

  bool is_zero() const { return value_.is_zero(); }
  bool is_rational() const { return value_.degree() <= 0; }
  Rational rational_value() const {
    if (!is_rational()) throw ContractViolation("residue is not rational");
    return value_.constant_term();
  }

  Residue operator-() const { return Residue(modulus_, -value_); }

  friend Residue operator+(const Residue& a, const Residue& b) {
    if (a.is_rational() && b.is_rational()) return Residue(a.value_.constant_term() + b.value_.constant_term());
    return Residue(merge(a, b), a.value_ + b.value_);
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    if (a.is_rational() && b.is_rational()) return Residue(a.value_.constant_term() - b.value_.constant_term());
    return Residue(merge(a, b), a.value_ - b.value_);
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    if (a.is_rational() && b.is_rational()) return Residue(a.value_.constant_term() * b.value_.constant_term());
    return Residue(merge(a, b), a.value_ * b.value_);
  }
  friend Residue operator/(const Residue& a, const Residue& b) { return a * b.inverse(); }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  Residue inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero residue");
    if (is_rational()) return Residue(value_.constant_term().inverse());
    auto [g, s, t] = xgcd(value_, *modulus_);
    if (g.degree() != 0) throw ContractViolation("residue modulus is not irreducible");
    return Residue(modulus_, s);
  }

  friend bool operator==(const Residue& a, const Residue& b) { return a.value_ == b.value_; }

  /// Text with the field generator named `symbol`.
  std::string str(const std::string& symbol = "a") const {
    if (is_rational()) return value_.constant_term().str();
    return to_string(value_, symbol);
  }

 private:
  static Modulus merge(const Residue& a, const Residue& b) {
    if (!a.modulus_) return b.modulus_;
    if (b.modulus_ && a.modulus_ != b.modulus_ && !(*a.modulus_ == *b.modulus_))
      throw ContractViolation("mixing residues of different fields");
    return a.modulus_;
  }

  Modulus modulus_;
  Polynomial value_;
};

/// A closed point of P^1 over Q: a Galois orbit of roots of a monic
/// irreducible polynomial, or the point at infinity.
class AlgebraicPoint {
 public:
  static AlgebraicPoint infinity() { return AlgebraicPoint(); }

  static AlgebraicPoint rational(const Rational& a) {
    return AlgebraicPoint(Polynomial{-a, Rational(1)});
  }

  /// Root of an irreducible polynomial; throws InputError when reducible.
  static AlgebraicPoint root_of(const Polynomial& m) {
    if (m.degree() < 1 || !is_irreducible(m)) throw InputError("point modulus must be irreducible over Q");
    return AlgebraicPoint(m.monic());
  }

  bool is_infinity() const { return !modulus_; }
  bool is_rational() const { return modulus_ && modulus_->degree() == 1; }
  int degree() const { return modulus_ ? modulus_->degree() : 1; }

  const Polynomial& modulus() const {
    if (!modulus_) throw ContractViolation("modulus of the point at infinity");
    return *modulus_;
  }

  Rational value() const {
    if (!is_rational()) throw ContractViolation("point is not rational");
    return -(*modulus_)[0];
  }

  /// Residue-field modulus; null for rational points.
  Residue::Modulus field() const {
    if (!modulus_ || modulus_->degree() == 1) return nullptr;
    return std::make_shared<const Polynomial>(*modulus_);
  }

  /// The point itself as an element of its residue field.
  Residue generator(const Residue::Modulus& field) const {
    if (is_rational()) return Residue(value());
    return Residue(field, Polynomial::x());
  }

  friend bool operator==(const AlgebraicPoint& a, const AlgebraicPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.modulus_ == *b.modulus_;
  }

  /// Finite points by (degree, coefficients); infinity last.
  friend bool operator<(const AlgebraicPoint& a, const AlgebraicPoint& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    if (a.is_rational() && b.is_rational()) return a.value() < b.value();
    return canonical_less(*a.modulus_, *b.modulus_);
  }

  std::string str(const std::string& var = "x") const {
    if (is_infinity()) return "inf";
    if (is_rational()) return value().str();
    return to_string(*modulus_, var) + " = 0";
  }

 private:
  AlgebraicPoint() = default;
  explicit AlgebraicPoint(Polynomial m) : modulus_(std::move(m)) {}

  std::optional<Polynomial> modulus_;
};

}  // namespace pfu
