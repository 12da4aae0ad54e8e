#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfu/exact/factor.hpp"
#include "pfu/exact/poly.hpp"
#include "pfu/exact/poly_gcd.hpp"

namespace pfu {

/// Quotient of polynomials over Q in canonical form: gcd(num, den) = 1 and
/// den monic. Equality is therefore field-by-field.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  template <std::integral T>
  RationalFunction(T c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RationalFunction x() { return RationalFunction(Polynomial::x()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  Rational constant_value() const { return num_.constant_term(); }

  /// Degree as a map P^1 -> P^1.
  int map_degree() const { return std::max(num_.degree(), den_.degree()); }

  RationalFunction operator-() const { return {-num_, den_, Canonical{}}; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel first to keep intermediate degrees small.
    Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return {(a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1), Canonical{}};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return a * RationalFunction(b.den_, b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction pow(int e) const {
    if (e < 0) return RationalFunction(1) / pow(-e);
    return {num_.pow(e), den_.pow(e), Canonical{}};
  }

  RationalFunction derivative() const {
    if (den_.degree() == 0) return {num_.derivative(), den_, Canonical{}};
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
  }

  /// f(g(z)) for a rational function g.
  RationalFunction compose(const RationalFunction& g) const {
    // Homogenize: f = N/D with n = deg N, d = deg D; substituting g = a/b gives
    // (sum N_i a^i b^(n-i)) b^d / ((sum D_i a^i b^(d-i)) b^n).
    const Polynomial& a = g.num_;
    const Polynomial& b = g.den_;
    auto homog = [&](const Polynomial& p) {
      int n = std::max(p.degree(), 0);
      std::vector<Polynomial> apow{Polynomial(Rational(1))}, bpow{Polynomial(Rational(1))};
      for (int i = 1; i <= n; ++i) {
        apow.push_back(apow.back() * a);
        bpow.push_back(bpow.back() * b);
      }
      Polynomial acc;
      for (int i = 0; i <= p.degree(); ++i)
        if (!p[i].is_zero()) acc += apow[i] * bpow[n - i] * p[i];
      return std::make_pair(acc, n);
    };
    auto [hn, n] = homog(num_);
    auto [hd, d] = homog(den_);
    if (n >= d) return {hn, hd * b.pow(n - d)};
    return {hn * b.pow(d - n), hd};
  }

  Rational eval(const Rational& at) const {
    Rational d = den_.eval(at);
    if (d.is_zero()) throw DivisionByZero("pole at evaluation point");
    return num_.eval(at) / d;
  }

  /// Valuation at the finite point cut out by an irreducible polynomial.
  int valuation(const Polynomial& irreducible) const {
    if (is_zero()) throw ZeroPolynomial("valuation of zero");
    int vn = multiplicity(irreducible, num_);
    if (vn > 0) return vn;
    return -multiplicity(irreducible, den_);
  }

  /// Valuation at infinity in the local parameter 1/x.
  int valuation_at_infinity() const {
    if (is_zero()) throw ZeroPolynomial("valuation of zero");
    return den_.degree() - num_.degree();
  }

  /// Value at infinity; only meaningful when valuation_at_infinity() >= 0.
  Rational value_at_infinity() const {
    if (num_.degree() < den_.degree()) return Rational(0);
    return num_.leading() / den_.leading();
  }

 private:
  struct Canonical {};
  RationalFunction(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Polynomial(Rational(1));
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(Rational(1));
      return;
    }
    if (den_.degree() > 0) {
      Polynomial g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    Rational lc = den_.leading();
    if (!lc.is_one()) {
      Rational inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

namespace detail {
inline std::string wrap_if_sum(const Polynomial& p, const std::string& var) {
  int terms = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) ++terms;
  std::string s = to_string(p, var);
  return terms > 1 ? "(" + s + ")" : s;
}
}  // namespace detail

/// Canonical text: expanded numerator over the factored monic denominator,
/// e.g. "(1/4*x^2 - 41/144*x + 2/9)/(x^2*(x - 1)^2)". Parses back to an
/// equal value.
inline std::string to_string(const RationalFunction& f, const std::string& var = "x") {
  if (f.is_polynomial()) return to_string(f.num(), var);
  std::string den;
  auto factors = squarefree_factor(f.den());
  for (const auto& [p, m] : factors) {
    if (!den.empty()) den += "*";
    den += detail::wrap_if_sum(p, var);
    if (m > 1) den += "^" + std::to_string(m);
  }
  if (factors.size() > 1) den = "(" + den + ")";
  return detail::wrap_if_sum(f.num(), var) + "/" + den;
}

}  // namespace pfu
