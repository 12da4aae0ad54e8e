#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pfu/error.hpp"
#include "pfu/exact/rational.hpp"

namespace pfu {

/// Dense univariate polynomial over an exact field F, coefficients stored
/// from the constant term upwards with no trailing zeros.
///
/// F must be default-constructible as zero, constructible from Rational and
/// provide field arithmetic, equality and is_zero().
template <class F>
class Poly {
 public:
  /// degree() of the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(const F& constant) : c_{constant} { trim(); }

  static Poly x() { return Poly(std::vector<F>{F(Rational(0)), F(Rational(1))}); }
  static Poly monomial(const F& c, int k) {
    std::vector<F> v(static_cast<size_t>(k) + 1, F(Rational(0)));
    v[k] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }

  F operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(Rational(0));
    return c_[i];
  }
  F leading() const { return c_.empty() ? F(Rational(0)) : c_.back(); }
  F constant_term() const { return (*this)[0]; }

  F eval(const F& at) const {
    F acc = F(Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Horner evaluation into any ring T that accepts F on the right.
  template <class T>
  T eval_in(const T& at, const T& zero) const {
    T acc = zero;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(Rational(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return {};
    F inv = F(Rational(1)) / leading();
    return *this * inv;
  }

  /// p(q(x)).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
    return acc;
  }

  /// Coefficients reversed with respect to degree n: x^n p(1/x).
  Poly reversed(int n) const {
    std::vector<F> v(static_cast<size_t>(std::max(n, 0)) + 1, F(Rational(0)));
    for (int i = 0; i <= degree(); ++i) v[n - i] = c_[i];
    return Poly(std::move(v));
  }

  /// Multiplicity of x as a factor.
  int low_order() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return kZeroDegree;
  }

  Poly operator-() const {
    std::vector<F> v(c_);
    for (auto& e : v) e = -e;
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(Rational(0)));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(Rational(0)));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(Rational(0)));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(Poly a, const F& s) {
    if (s.is_zero()) return {};
    for (auto& e : a.c_) e = e * s;
    a.trim();
    return a;
  }
  friend Poly operator*(const F& s, Poly a) { return std::move(a) * s; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(int e) const {
    Poly r(F(Rational(1))), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<F> rem(c_);
    std::vector<F> quo(static_cast<size_t>(degree() - d.degree()) + 1, F(Rational(0)));
    F inv = F(Rational(1)) / d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      F q = rem[k + d.degree()] * inv;
      quo[k] = q;
      if (q.is_zero()) continue;
      for (int j = 0; j <= d.degree(); ++j) rem[k + j] = rem[k + j] - q * d.c_[j];
    }
    rem.resize(static_cast<size_t>(d.degree()));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  bool divides(const Poly& other) const { return (other % *this).is_zero(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

using Polynomial = Poly<Rational>;

/// Canonical ordering: by degree, then coefficients from the top down.
inline bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

/// Renders c*x^k terms as "36*x^2 - 41*x + 32"; parseable by the CLI grammar.
inline std::string to_string(const Polynomial& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p[i];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a;
      continue;
    }
    if (!a.is_one()) os << a << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace pfu
