#pragma once

// Truncated formal Laurent series over an exact field.
//
// A series carries its own truncation order: the value is
//   sum_i c[i] u^(valuation + i) + O(u^precision)
// and every operation returns the tightest truncation that is sound for its
// inputs. precision == kExact marks a series with finitely many terms known
// exactly (a Laurent polynomial).

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pfu/error.hpp"
#include "pfu/exact/algebraic.hpp"
#include "pfu/exact/poly.hpp"
#include "pfu/exact/rational.hpp"

namespace pfu {

inline constexpr int kExact = std::numeric_limits<int>::max();

namespace detail {
inline int sat_add(int a, int b) { return (a == kExact || b == kExact) ? kExact : a + b; }
inline int sat_mul(int a, int b) { return a == kExact ? kExact : a * b; }
}  // namespace detail

template <class F>
class PowerSeries {
 public:
  /// The exact zero series.
  PowerSeries() = default;

  PowerSeries(int valuation, std::vector<F> coeffs, int precision)
      : val_(valuation), c_(std::move(coeffs)), prec_(precision) {
    normalize();
  }

  static PowerSeries exact(int valuation, std::vector<F> coeffs) {
    return PowerSeries(valuation, std::move(coeffs), kExact);
  }
  /// O(u^precision).
  static PowerSeries zero(int precision) { return PowerSeries(precision, {}, precision); }
  static PowerSeries constant(const F& c, int precision = kExact) { return PowerSeries(0, {c}, precision); }
  static PowerSeries monomial(const F& c, int k, int precision = kExact) { return PowerSeries(k, {c}, precision); }
  static PowerSeries variable(int precision = kExact) { return monomial(F(Rational(1)), 1, precision); }
  static PowerSeries from_poly(const Poly<F>& p, int precision = kExact) {
    return PowerSeries(0, p.coeffs(), precision);
  }

  /// Lowest exponent with a known nonzero coefficient; equals precision()
  /// for a truncated zero.
  int valuation() const { return val_; }
  int precision() const { return prec_; }
  bool is_exact() const { return prec_ == kExact; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& stored() const { return c_; }

  /// Coefficient of u^n; n must lie below the precision.
  F coeff(int n) const {
    if (n >= prec_) throw ContractViolation("coefficient beyond truncation order");
    if (n < val_ || n >= val_ + static_cast<int>(c_.size())) return F(Rational(0));
    return c_[n - val_];
  }
  F leading() const {
    if (c_.empty()) throw DivisionByZeroSeries("leading coefficient of zero series");
    return c_.front();
  }

  /// Last exponent with a stored coefficient (valuation - 1 if none).
  int last_exponent() const { return val_ + static_cast<int>(c_.size()) - 1; }

  PowerSeries truncate(int precision) const { return PowerSeries(val_, c_, std::min(prec_, precision)); }
  /// Same coefficients with a claimed precision; used by Newton iterations
  /// where the tail is about to be corrected.
  PowerSeries with_precision(int precision) const { return PowerSeries(val_, c_, precision); }

  /// Multiplies by u^k.
  PowerSeries shift(int k) const {
    if (c_.empty()) return is_exact() ? *this : zero(prec_ + k);
    return PowerSeries(val_ + k, c_, detail::sat_add(prec_, k));
  }

  PowerSeries operator-() const {
    std::vector<F> v(c_);
    for (auto& e : v) e = -e;
    return PowerSeries(val_, std::move(v), prec_);
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return combine(a, b, false); }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return combine(a, b, true); }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return PowerSeries();
    int prec = std::min(detail::sat_add(a.val_, b.prec_), detail::sat_add(b.val_, a.prec_));
    int val = a.val_ + b.val_;
    if (a.is_zero() || b.is_zero()) return zero(prec);
    int len = static_cast<int>(a.c_.size() + b.c_.size()) - 1;
    if (prec != kExact) len = std::min(len, prec - val);
    if (len <= 0) return zero(prec);
    std::vector<F> v(static_cast<size_t>(len), F(Rational(0)));
    for (size_t i = 0; i < a.c_.size() && static_cast<int>(i) < len; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size() && static_cast<int>(i + j) < len; ++j)
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return PowerSeries(val, std::move(v), prec);
  }
  friend PowerSeries operator*(const PowerSeries& a, const F& s) {
    if (s.is_zero()) return a.is_exact() ? PowerSeries() : zero(a.prec_);
    std::vector<F> v(a.c_);
    for (auto& e : v) e = e * s;
    return PowerSeries(a.val_, std::move(v), a.prec_);
  }
  friend PowerSeries operator*(const F& s, const PowerSeries& a) { return a * s; }

  PowerSeries& operator+=(const PowerSeries& o) { return *this = *this + o; }
  PowerSeries& operator-=(const PowerSeries& o) { return *this = *this - o; }
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse; the series must have finite precision unless
  /// it is a monomial.
  PowerSeries inverse() const {
    if (is_zero()) throw DivisionByZeroSeries("inverse of a (truncated) zero series");
    if (is_exact() && c_.size() == 1) return exact(-val_, {F(Rational(1)) / c_[0]});
    if (is_exact()) throw PrecisionRequired("inverse of an exact series needs a truncation order");
    int rel = prec_ - val_;
    std::vector<F> b(static_cast<size_t>(rel), F(Rational(0)));
    F inv0 = F(Rational(1)) / c_[0];
    b[0] = inv0;
    for (int n = 1; n < rel; ++n) {
      F s = F(Rational(0));
      for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k) s = s + c_[k] * b[n - k];
      b[n] = -(s * inv0);
    }
    return PowerSeries(-val_, std::move(b), rel - val_);
  }

  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (b.is_zero()) throw DivisionByZeroSeries("series division by (truncated) zero");
    if (a.is_zero() && a.is_exact()) return PowerSeries();
    if (a.is_zero()) return zero(detail::sat_add(a.prec_, -b.val_));
    if (b.is_exact()) {
      if (b.c_.size() == 1) return a * b.inverse();
      if (a.is_exact()) throw PrecisionRequired("quotient of exact series needs a truncation order");
      // Enough relative precision in b for the quotient to reach a's order.
      return a * b.truncate(b.val_ + (a.prec_ - a.val_)).inverse();
    }
    return a * b.inverse();
  }

  PowerSeries pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    PowerSeries r = constant(F(Rational(1))), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.val_ == b.val_ && a.prec_ == b.prec_ && a.c_ == b.c_;
  }

  /// True when both agree on every coefficient below min(n, both precisions).
  friend bool agree_below(const PowerSeries& a, const PowerSeries& b, int n) {
    int lim = std::min({n, a.prec_, b.prec_});
    int lo = std::min(a.val_, b.val_);
    for (int e = lo; e < lim; ++e)
      if (!(a.coeff(e) == b.coeff(e))) return false;
    return true;
  }

 private:
  static PowerSeries combine(const PowerSeries& a, const PowerSeries& b, bool subtract) {
    int prec = std::min(a.prec_, b.prec_);
    if (a.is_zero() && b.is_zero()) return prec == kExact ? PowerSeries() : zero(prec);
    int lo = std::min(a.is_zero() ? b.val_ : a.val_, b.is_zero() ? a.val_ : b.val_);
    int hi = a.is_zero() ? b.last_exponent() : b.is_zero() ? a.last_exponent()
                                                            : std::max(a.last_exponent(), b.last_exponent());
    if (prec != kExact) hi = std::min(hi, prec - 1);
    if (hi < lo) return zero(prec);
    std::vector<F> v(static_cast<size_t>(hi - lo + 1), F(Rational(0)));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      int e = a.val_ + static_cast<int>(i);
      if (e <= hi) v[e - lo] = a.c_[i];
    }
    for (size_t i = 0; i < b.c_.size(); ++i) {
      int e = b.val_ + static_cast<int>(i);
      if (e <= hi) v[e - lo] = subtract ? v[e - lo] - b.c_[i] : v[e - lo] + b.c_[i];
    }
    return PowerSeries(lo, std::move(v), prec);
  }

  void normalize() {
    if (prec_ != kExact) {
      int keep = std::max(0, prec_ - val_);
      if (static_cast<int>(c_.size()) > keep) c_.resize(static_cast<size_t>(keep));
    }
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      val_ = prec_;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      val_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  int val_ = kExact;
  std::vector<F> c_;
  int prec_ = kExact;
};

using QSeries = PowerSeries<Rational>;

template <class F>
PowerSeries<F> derivative(const PowerSeries<F>& a) {
  if (a.is_zero()) return a.is_exact() ? a : PowerSeries<F>::zero(a.precision() - 1);
  std::vector<F> v(a.stored().size());
  for (size_t i = 0; i < v.size(); ++i) {
    int e = a.valuation() + static_cast<int>(i);
    v[i] = a.stored()[i] * F(Rational(e));
  }
  int prec = a.is_exact() ? kExact : a.precision() - 1;
  return PowerSeries<F>(a.valuation() - 1, std::move(v), prec);
}

/// Formal exponential; requires no constant or negative-order terms.
template <class F>
PowerSeries<F> exp(const PowerSeries<F>& a) {
  if (a.is_zero()) return PowerSeries<F>::constant(F(Rational(1)), a.precision());
  if (a.valuation() < 1) throw BadConstantTerm("exp needs a series without constant term");
  if (a.is_exact()) throw PrecisionRequired("exp of an exact series needs a truncation order");
  int p = a.precision();
  std::vector<F> e(static_cast<size_t>(p), F(Rational(0)));
  e[0] = F(Rational(1));
  for (int n = 1; n < p; ++n) {
    F s = F(Rational(0));
    for (int k = a.valuation(); k <= n; ++k) s = s + F(Rational(k)) * a.coeff(k) * e[n - k];
    e[n] = s / F(Rational(n));
  }
  return PowerSeries<F>(0, std::move(e), p);
}

/// Formal logarithm; requires constant term 1.
template <class F>
PowerSeries<F> log(const PowerSeries<F>& a) {
  if (a.is_zero() || a.valuation() != 0 || !(a.leading() == F(Rational(1))))
    throw BadConstantTerm("log needs constant term 1");
  if (a.is_exact()) {
    if (a.last_exponent() == 0) return PowerSeries<F>();
    throw PrecisionRequired("log of an exact series needs a truncation order");
  }
  int p = a.precision();
  std::vector<F> l(static_cast<size_t>(p), F(Rational(0)));
  for (int n = 1; n < p; ++n) {
    F s = F(Rational(n)) * a.coeff(n);
    for (int k = 1; k < n; ++k) s = s - F(Rational(k)) * l[k] * a.coeff(n - k);
    l[n] = s / F(Rational(n));
  }
  return PowerSeries<F>(0, std::move(l), p);
}

/// outer(inner). An infinite (truncated) outer series needs inner to have
/// positive valuation; exact Laurent polynomials compose with anything
/// invertible.
template <class F>
PowerSeries<F> compose(const PowerSeries<F>& outer, const PowerSeries<F>& inner) {
  using S = PowerSeries<F>;
  if (!outer.is_exact() && inner.valuation() < 1)
    throw CompositionDiverges("composition with an inner series that has a constant term");
  if (outer.is_zero()) {
    if (outer.is_exact()) return S();
    return S::zero(detail::sat_mul(outer.precision(), inner.valuation()));
  }
  const auto& c = outer.stored();
  S acc = S::constant(c.back());
  for (size_t i = c.size() - 1; i-- > 0;) acc = acc * inner + S::constant(c[i]);
  int v = outer.valuation();
  if (v > 0) acc = acc * inner.pow(v);
  if (v < 0) acc = acc * inner.inverse().pow(-v);
  if (!outer.is_exact()) acc = acc.truncate(detail::sat_mul(outer.precision(), inner.valuation()));
  return acc;
}

/// Compositional inverse of a series u -> a1 u + ..., by Newton iteration.
template <class F>
PowerSeries<F> revert(const PowerSeries<F>& a) {
  using S = PowerSeries<F>;
  if (a.is_zero() || a.valuation() != 1) throw BadValuation("reversion needs valuation exactly 1");
  if (a.is_exact()) throw PrecisionRequired("reversion of an exact series needs a truncation order");
  const int p = a.precision();
  const S id = S::variable();
  S b = S::monomial(F(Rational(1)) / a.leading(), 1, 2);
  S da = derivative(a);
  int m = 2;
  while (m < p) {
    m = std::min(2 * m, p);
    S bm = b.with_precision(m);
    S residual = compose(a.truncate(m), bm) - id;
    S slope = compose(da.truncate(m - 1), bm);
    b = (bm - residual / slope).truncate(m);
  }
  return b.truncate(p);
}

/// {w; u} = (3 w''^2 - 2 w' w''') / (4 w'^2).
template <class F>
PowerSeries<F> schwarzian(const PowerSeries<F>& w) {
  auto d1 = derivative(w);
  if (d1.is_zero()) throw ConstantInput("Schwarzian of a constant");
  auto d2 = derivative(d1);
  auto d3 = derivative(d2);
  auto num = F(Rational(3)) * d2 * d2 - F(Rational(2)) * d1 * d3;
  if (num.is_zero() && num.is_exact()) return PowerSeries<F>();
  return num / (F(Rational(4)) * d1 * d1);
}

inline std::string coeff_text(const Rational& c) { return c.str(); }
inline std::string coeff_text(const Residue& c) { return c.is_rational() ? c.rational_value().str() : "(" + c.str() + ")"; }

namespace detail {
inline bool is_negative(const Rational& c) { return c.sign() < 0; }
inline bool is_negative(const Residue& c) { return c.is_rational() && c.rational_value().sign() < 0; }
}  // namespace detail

/// "q - 744*q^2 + 356652*q^3 + O(q^4)"; negative powers print as "c/q^k".
template <class F>
std::string to_string(const PowerSeries<F>& s, const std::string& var = "q") {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < s.stored().size(); ++i) {
    F c = s.stored()[i];
    if (c.is_zero()) continue;
    int e = s.valuation() + static_cast<int>(i);
    bool neg = detail::is_negative(c);
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string ct = coeff_text(c);
    bool unit = ct == "1";
    if (e == 0) {
      os << ct;
    } else if (e > 0) {
      if (!unit) os << ct << "*";
      os << var;
      if (e > 1) os << "^" << e;
    } else {
      os << ct << "/" << var;
      if (e < -1) os << "^" << -e;
    }
  }
  if (!s.is_exact()) {
    os << (first ? "" : " + ") << "O(" << var;
    if (s.precision() != 1) os << "^" << s.precision();
    os << ")";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

}  // namespace pfu
