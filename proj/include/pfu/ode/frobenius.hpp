#pragma once

// Formal solution bases by Frobenius' method, done as linear algebra.
//
// For an exponent class rho0 + Z the ansatz is
//   y = sum_n u^(rho0 + n) sum_j c[n][j] log(u)^j / j!,
// on which theta acts on the coefficient vectors c[n] as (rho0 + n) + N with
// (N c)_j = c_{j+1}. The recurrence
//   g_0(rho0 + n + N) c[n] = - sum_{m >= 1} g_m(rho0 + n - m + N) c[n - m]
// is solved step by step. Where rho0 + n is a root of multiplicity mu,
// g_0(rho0 + n + N) = N^mu U with U invertible: the top mu log components of
// the right side must vanish (partial solutions are recombined to make them
// vanish) and mu new solutions start at n.

#include <algorithm>
#include <vector>

#include "pfu/ode/local.hpp"

namespace pfu {

struct LogSolution {
  /// Leading exponent of the class, in the local parameter.
  Residue exponent;
  /// y = u^exponent * sum_j log_terms[j] * log(u)^j; series in integer powers.
  std::vector<LocalSeries> log_terms;

  int log_degree() const { return static_cast<int>(log_terms.size()) - 1; }
};

struct FrobeniusBasis {
  AlgebraicPoint point;
  int terms = 0;
  std::vector<LogSolution> solutions;

  int max_log_degree() const {
    int d = 0;
    for (const auto& s : solutions) d = std::max(d, s.log_degree());
    return d;
  }
  bool has_log() const { return max_log_degree() > 0; }
};

namespace detail::frob {

using Vec = std::vector<Residue>;

inline Vec zeros(int k) { return Vec(static_cast<size_t>(k), Residue(0)); }

/// (sum_i b_i N^i) v.
inline Vec apply_nilpotent(const Poly<Residue>& b, const Vec& v) {
  Vec out = zeros(static_cast<int>(v.size()));
  for (int i = 0; i <= b.degree(); ++i) {
    if (b[i].is_zero()) continue;
    for (size_t j = 0; j + i < v.size(); ++j)
      if (!v[j + i].is_zero()) out[j] += b[i] * v[j + i];
  }
  return out;
}

/// Solves (sum_{i >= mu} a_i N^(i - mu)) v = w.
inline Vec solve_unipotent(const Poly<Residue>& a, int mu, const Vec& w) {
  const int k = static_cast<int>(w.size());
  Vec v = zeros(k);
  Residue inv = a[mu].inverse();
  for (int j = k - 1; j >= 0; --j) {
    Residue s = w[j];
    for (int i = 1; j + i < k; ++i)
      if (!v[j + i].is_zero()) s -= a[mu + i] * v[j + i];
    v[j] = s * inv;
  }
  return v;
}

/// Reduced row echelon form in place; returns the pivot column of each row.
inline std::vector<int> rref(std::vector<Vec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int width = static_cast<int>(rows.front().size());
  size_t r = 0;
  for (int col = 0; col < width && r < rows.size(); ++col) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Residue inv = rows[r][col].inverse();
    for (auto& e : rows[r]) e = e * inv;
    for (size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col].is_zero()) continue;
      Residue f = rows[o][col];
      for (int c = col; c < width; ++c) rows[o][c] -= f * rows[r][c];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis of {lambda : sum_p lambda_p cols[p] = 0}.
inline std::vector<Vec> kernel(const std::vector<Vec>& cols) {
  const int count = static_cast<int>(cols.size());
  if (count == 0) return {};
  const int height = static_cast<int>(cols.front().size());
  std::vector<Vec> rows(static_cast<size_t>(height), zeros(count));
  for (int p = 0; p < count; ++p)
    for (int i = 0; i < height; ++i) rows[i][p] = cols[p][i];
  auto pivots = rref(rows);
  std::vector<Vec> out;
  for (int free = 0; free < count; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vec v = zeros(count);
    v[free] = Residue(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

struct Partial {
  std::vector<Vec> c;
};

inline bool integer_offset(const Residue& a, const Residue& b, long* offset) {
  Residue d = a - b;
  if (!d.is_rational() || !d.rational_value().is_integer()) return false;
  *offset = d.rational_value().to_long();
  return true;
}

}  // namespace detail::frob

/// Basis of formal solutions at the point of `local`, `terms` coefficients
/// per series (relative to each class exponent). Needs every root of the
/// indicial polynomial in the residue field.
inline FrobeniusBasis frobenius_basis(const LocalOperator& local, int terms) {
  using namespace detail::frob;
  if (local.terms() < terms) throw ContractViolation("local operator computed to too few terms");
  const int k = local.order();
  auto roots = local_exponents(local);
  std::vector<Residue> leaders;
  for (const auto& r : roots) {
    if (!r.is_exact()) throw UnsupportedExponentField("exponent " + r.str() + " lies in a quadratic extension");
    bool placed = false;
    for (auto& lead : leaders) {
      long off = 0;
      if (integer_offset(r.base(), lead, &off)) {
        if (off < 0) lead = r.base();
        placed = true;
        break;
      }
    }
    if (!placed) leaders.push_back(r.base());
  }
  std::sort(leaders.begin(), leaders.end(), [](const Residue& a, const Residue& b) {
    if (a.is_rational() && b.is_rational()) return a.rational_value() < b.rational_value();
    return a.is_rational() && !b.is_rational();
  });

  FrobeniusBasis basis{local.point(), terms, {}};
  const Poly<Residue>& g0 = local.g(0);
  for (const Residue& rho0 : leaders) {
    std::vector<Partial> partials;
    for (int n = 0; n < terms; ++n) {
      Residue s = rho0 + Residue(n);
      Poly<Residue> a = g0.compose(Poly<Residue>{s, Residue(1)});
      int mu = 0;
      while (a[mu].is_zero()) ++mu;

      std::vector<Poly<Residue>> shifted;
      for (int m = 1; m <= n; ++m)
        shifted.push_back(local.g(m).is_zero() ? Poly<Residue>()
                                               : local.g(m).compose(Poly<Residue>{s - Residue(m), Residue(1)}));
      std::vector<Vec> rhs;
      for (const auto& p : partials) {
        Vec r = zeros(k);
        for (int m = 1; m <= n; ++m) {
          if (shifted[m - 1].is_zero()) continue;
          Vec t = apply_nilpotent(shifted[m - 1], p.c[n - m]);
          for (int j = 0; j < k; ++j) r[j] -= t[j];
        }
        rhs.push_back(std::move(r));
      }

      if (mu > 0 && !partials.empty()) {
        std::vector<Vec> coker;
        for (const auto& r : rhs) coker.emplace_back(r.begin() + (k - mu), r.end());
        auto combos = kernel(coker);
        if (combos.size() != partials.size()) {
          std::vector<Partial> next;
          std::vector<Vec> next_rhs;
          for (const auto& lam : combos) {
            Partial q{std::vector<Vec>(static_cast<size_t>(n), zeros(k))};
            Vec qr = zeros(k);
            for (size_t p = 0; p < partials.size(); ++p) {
              if (lam[p].is_zero()) continue;
              for (int i = 0; i < n; ++i)
                for (int j = 0; j < k; ++j) q.c[i][j] += lam[p] * partials[p].c[i][j];
              for (int j = 0; j < k; ++j) qr[j] += lam[p] * rhs[p][j];
            }
            next.push_back(std::move(q));
            next_rhs.push_back(std::move(qr));
          }
          partials = std::move(next);
          rhs = std::move(next_rhs);
        }
      }
      for (size_t p = 0; p < partials.size(); ++p) {
        Vec w = zeros(k);
        for (int j = mu; j < k; ++j) w[j] = rhs[p][j - mu];
        partials[p].c.push_back(solve_unipotent(a, mu, w));
      }
      for (int j = 0; j < mu; ++j) {
        Partial fresh{std::vector<Vec>(static_cast<size_t>(n), zeros(k))};
        Vec e = zeros(k);
        e[j] = Residue(1);
        fresh.c.push_back(solve_unipotent(a, mu, e));
        partials.push_back(std::move(fresh));
      }
    }

    // Canonical representatives: reduced echelon form on the coefficients
    // ordered by (n ascending, log index descending).
    std::vector<Vec> flat;
    for (const auto& p : partials) {
      Vec v;
      for (int n = 0; n < terms; ++n)
        for (int j = k - 1; j >= 0; --j) v.push_back(p.c[n][j]);
      flat.push_back(std::move(v));
    }
    auto pivots = rref(flat);
    std::vector<size_t> order(flat.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      int nx = pivots[x] / k, ny = pivots[y] / k;
      if (nx != ny) return nx < ny;
      return pivots[x] > pivots[y];
    });
    for (size_t idx : order) {
      const Vec& v = flat[idx];
      LogSolution sol{rho0, {}};
      Rational fact(1);
      for (int j = 0; j < k; ++j) {
        if (j > 0) fact *= Rational(j);
        std::vector<Residue> coeffs;
        for (int n = 0; n < terms; ++n) coeffs.push_back(v[n * k + (k - 1 - j)] * Residue(fact.inverse()));
        sol.log_terms.emplace_back(0, std::move(coeffs), terms);
      }
      while (sol.log_terms.size() > 1 && sol.log_terms.back().is_zero()) sol.log_terms.pop_back();
      basis.solutions.push_back(std::move(sol));
    }
  }
  return basis;
}

inline FrobeniusBasis frobenius_basis(const LinearODE& L, const AlgebraicPoint& at, int terms) {
  return frobenius_basis(LocalOperator(L, at, terms), terms);
}

}  // namespace pfu
