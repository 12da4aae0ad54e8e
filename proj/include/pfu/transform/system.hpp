#pragma once

// First-order systems Y' = A Y over Q(x) and their scalar equations.

#include <optional>
#include <vector>

#include "pfu/ode/linear_ode.hpp"

namespace pfu {

using Matrix = std::vector<std::vector<RationalFunction>>;

namespace detail {

/// Coefficients c with sum_j c_j rows[j] = target, if any.
inline std::optional<std::vector<RationalFunction>> combination(const std::vector<std::vector<RationalFunction>>& rows,
                                                               const std::vector<RationalFunction>& target) {
  const size_t m = rows.size();
  const size_t n = target.size();
  // Augmented system: n equations, m unknowns.
  std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(m + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) a[i][j] = rows[j][i];
    a[i][m] = target[i];
  }
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t col = 0; col < m && r < n; ++col) {
    size_t sel = r;
    while (sel < n && a[sel][col].is_zero()) ++sel;
    if (sel == n) continue;
    std::swap(a[r], a[sel]);
    RationalFunction inv = RationalFunction(1) / a[r][col];
    for (auto& e : a[r]) e = e * inv;
    for (size_t o = 0; o < n; ++o) {
      if (o == r || a[o][col].is_zero()) continue;
      RationalFunction f = a[o][col];
      for (size_t c = col; c <= m; ++c) a[o][c] -= f * a[r][c];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (size_t i = r; i < n; ++i)
    if (!a[i][m].is_zero()) return std::nullopt;
  std::vector<RationalFunction> c(m);
  for (size_t i = 0; i < pivot_cols.size(); ++i) c[pivot_cols[i]] = a[i][m];
  return c;
}

}  // namespace detail

/// Monic scalar operator for Y[component] where Y' = A Y, by the cyclic
/// vector method. When the derivatives of the component span less than the
/// full space the operator has lower order, unless `require_cyclic`.
inline LinearODE system_to_scalar(const Matrix& A, size_t component, bool require_cyclic = false) {
  const size_t n = A.size();
  for (const auto& row : A)
    if (row.size() != n) throw InputError("system matrix must be square");
  if (component >= n) throw InputError("component index out of range");
  // v_i . Y is the i-th derivative of Y[component]: v_{i+1} = v_i' + v_i A.
  std::vector<std::vector<RationalFunction>> vs;
  std::vector<RationalFunction> v(n);
  v[component] = RationalFunction(1);
  for (;;) {
    if (!vs.empty()) {
      if (auto c = detail::combination(vs, v)) {
        const size_t k = vs.size();
        if (require_cyclic && k < n) throw NotCyclic("component " + std::to_string(component) + " is not cyclic");
        std::vector<RationalFunction> p(k);
        for (size_t j = 0; j < k; ++j) p[k - j - 1] = -(*c)[j];
        return LinearODE(std::move(p));
      }
    }
    vs.push_back(v);
    std::vector<RationalFunction> next(n);
    for (size_t j = 0; j < n; ++j) {
      next[j] = v[j].derivative();
      for (size_t l = 0; l < n; ++l)
        if (!v[l].is_zero() && !A[l][j].is_zero()) next[j] += v[l] * A[l][j];
    }
    v = std::move(next);
  }
}

}  // namespace pfu
