#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfu/error.hpp"
#include "pfu/exact/ratfunc.hpp"

namespace pfu {

/// Monic linear operator D^k + P1 D^(k-1) + ... + Pk with rational-function
/// coefficients in one variable.
class LinearODE {
 public:
  LinearODE() = default;
  /// coeffs[i - 1] = P_i.
  explicit LinearODE(std::vector<RationalFunction> coeffs) : p_(std::move(coeffs)) {
    if (p_.empty()) throw InputError("operator of order 0");
  }

  int order() const { return static_cast<int>(p_.size()); }
  /// P_i for 1 <= i <= order; P_0 = 1.
  RationalFunction coeff(int i) const {
    if (i == 0) return RationalFunction(1);
    return p_.at(static_cast<size_t>(i - 1));
  }
  const std::vector<RationalFunction>& coeffs() const { return p_; }

  /// L(f) for a rational function f.
  RationalFunction apply(const RationalFunction& f) const {
    RationalFunction acc;
    std::vector<RationalFunction> ders{f};
    for (int j = 1; j <= order(); ++j) ders.push_back(ders.back().derivative());
    for (int i = 0; i <= order(); ++i) acc += coeff(i) * ders[order() - i];
    return acc;
  }

  friend bool operator==(const LinearODE& a, const LinearODE& b) { return a.p_ == b.p_; }

 private:
  std::vector<RationalFunction> p_;
};

/// Operator from non-monic coefficients a_0 D^k + ... + a_k (a_0 != 0).
inline LinearODE monic_operator(const std::vector<RationalFunction>& a) {
  if (a.empty() || a[0].is_zero()) throw InputError("leading coefficient vanishes");
  std::vector<RationalFunction> p;
  for (size_t i = 1; i < a.size(); ++i) p.push_back(a[i] / a[0]);
  return LinearODE(std::move(p));
}

/// The operator satisfied by g(t) = f(phi(t)) when L f = 0.
inline LinearODE change_variable(const LinearODE& L, const RationalFunction& phi) {
  RationalFunction dphi = phi.derivative();
  if (dphi.is_zero()) throw ConstantMap("change of variable by a constant");
  RationalFunction inv = RationalFunction(1) / dphi;
  const int k = L.order();
  // powers[j][m]: coefficient of D_t^m in D_x^j.
  std::vector<std::vector<RationalFunction>> powers{{RationalFunction(1)}};
  for (int j = 1; j <= k; ++j) {
    const auto& prev = powers.back();
    std::vector<RationalFunction> next(static_cast<size_t>(j) + 1);
    for (size_t m = 0; m < prev.size(); ++m) {
      next[m] += inv * prev[m].derivative();
      next[m + 1] += inv * prev[m];
    }
    powers.push_back(std::move(next));
  }
  std::vector<RationalFunction> total(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    RationalFunction pi = L.coeff(i).compose(phi);
    if (pi.is_zero()) continue;
    const auto& row = powers[k - i];
    for (size_t m = 0; m < row.size(); ++m) total[k - m] += pi * row[m];
  }
  return monic_operator(total);
}

/// Multi-line text: "f''' + P1 f'' + ..." as one coefficient per line.
inline std::string to_string(const LinearODE& L, const std::string& var = "x") {
  std::string out;
  for (int i = 1; i <= L.order(); ++i) {
    if (i > 1) out += "\n";
    out += "P" + std::to_string(i) + ": " + to_string(L.coeff(i), var);
  }
  return out;
}

}  // namespace pfu
