#include "mcenter/lp.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace mcenter {

void HPolytope::add_inequality(RationalVector coeffs, Rational rhs) {
  if (coeffs.size() != dim) throw std::invalid_argument("add_inequality: coefficient length != dim");
  inequalities.push_back({std::move(coeffs), std::move(rhs)});
}

void HPolytope::add_equality(RationalVector coeffs, Rational rhs) {
  if (coeffs.size() != dim) throw std::invalid_argument("add_equality: coefficient length != dim");
  equalities.push_back({std::move(coeffs), std::move(rhs)});
}

bool HPolytope::contains(const RationalVector& point) const {
  if (point.size() != dim) return false;
  for (const auto& row : inequalities)
    if (dot(row.coeffs, point) > row.rhs) return false;
  for (const auto& row : equalities)
    if (dot(row.coeffs, point) != row.rhs) return false;
  return true;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::infeasible:
      return "infeasible";
    case LpStatus::unbounded:
      return "unbounded";
  }
  return "unknown";
}

RationalVector AffineChart::lift(const RationalVector& reduced) const {
  assert(reduced.size() == directions.size());
  RationalVector x = origin;
  for (std::size_t j = 0; j < directions.size(); ++j) {
    if (sgn(reduced[j]) == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (sgn(directions[j][i]) != 0) x[i] += reduced[j] * directions[j][i];
  }
  return x;
}

std::optional<AffineChart> solve_equalities(std::size_t dim, const std::vector<LinearConstraint>& equalities) {
  // Reduced row echelon form of [E | e]; column `dim` holds the right-hand side.
  RationalMatrix rows;
  rows.reserve(equalities.size());
  for (const auto& eq : equalities) {
    if (eq.coeffs.size() != dim) throw std::invalid_argument("solve_equalities: coefficient length != dim");
    RationalVector row = eq.coeffs;
    row.push_back(eq.rhs);
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);

    Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank])
      if (sgn(v) != 0) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      Rational factor = rows[r][col];
      for (std::size_t c = col; c <= dim; ++c)
        if (sgn(rows[rank][c]) != 0) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (sgn(rows[r][dim]) != 0) return std::nullopt;

  AffineChart chart;
  chart.origin.assign(dim, Rational(0));
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t r = 0; r < rank; ++r) {
    chart.origin[pivot_cols[r]] = rows[r][dim];
    is_pivot[pivot_cols[r]] = true;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    if (is_pivot[col]) continue;
    RationalVector direction(dim, Rational(0));
    direction[col] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      if (sgn(rows[r][col]) != 0) direction[pivot_cols[r]] = -rows[r][col];
    chart.directions.push_back(std::move(direction));
  }
  return chart;
}

std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_square: size mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c)
        if (sgn(a[col][c]) != 0) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c)
      if (sgn(a[i][c]) != 0) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

std::size_t matrix_rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c)
        if (sgn(rows[rank][c]) != 0) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Compact dense tableau for  max c.z  s.t.  A z <= b, z >= 0.
// Columns 0..n-1 hold the nonbasic variables, column n the phase-one
// artificial, column n+1 the right-hand side. Row m is the objective,
// row m+1 the phase-one objective. Variable ids: structural 0..n-1,
// slacks n..n+m-1, artificial -1. Bland's rule on these ids.
class Tableau {
 public:
  Tableau(const RationalMatrix& a, const RationalVector& b, const RationalVector& c)
      : m_(b.size()), n_(c.size()), basic_(m_), nonbasic_(n_ + 1), d_(m_ + 2, RationalVector(n_ + 2)) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) d_[i][j] = a[i][j];
      d_[i][n_] = -1;
      d_[i][n_ + 1] = b[i];
      basic_[i] = static_cast<long>(n_ + i);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      nonbasic_[j] = static_cast<long>(j);
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  LpStatus solve(RationalVector& z, Rational& value) {
    std::size_t lowest = 0;
    for (std::size_t i = 1; i < m_; ++i)
      if (d_[i][n_ + 1] < d_[lowest][n_ + 1]) lowest = i;
    if (m_ > 0 && sgn(d_[lowest][n_ + 1]) < 0) {
      pivot(lowest, n_);
      if (!run(m_ + 1, false) || sgn(d_[m_ + 1][n_ + 1]) < 0) return LpStatus::infeasible;
      for (std::size_t i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        std::size_t s = n_ + 1;
        for (std::size_t j = 0; j <= n_; ++j)
          if (sgn(d_[i][j]) != 0 && (s == n_ + 1 || nonbasic_[j] < nonbasic_[s])) s = j;
        assert(s != n_ + 1);
        pivot(i, s);
      }
    }
    if (!run(m_, true)) return LpStatus::unbounded;

    z.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] >= 0 && basic_[i] < static_cast<long>(n_)) z[static_cast<std::size_t>(basic_[i])] = d_[i][n_ + 1];
    value = d_[m_][n_ + 1];
    return LpStatus::optimal;
  }

 private:
  void pivot(std::size_t r, std::size_t s) {
    const Rational inv = 1 / d_[r][s];
    const RationalVector& prow = d_[r];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n_ + 2; ++j)
      if (j != s && sgn(prow[j]) != 0) support.push_back(j);
    Rational factor;
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r || sgn(d_[i][s]) == 0) continue;
      factor = d_[i][s] * inv;
      RationalVector& row = d_[i];
      for (std::size_t j : support) row[j] -= prow[j] * factor;
      row[s] = -factor;
    }
    for (std::size_t j : support) d_[r][j] *= inv;
    d_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Returns false when the objective in row `obj` is unbounded.
  bool run(std::size_t obj, bool freeze_artificial) {
    for (;;) {
      std::size_t s = n_ + 1;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (freeze_artificial && nonbasic_[j] == -1) continue;
        if (sgn(d_[obj][j]) < 0 && (s == n_ + 1 || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == n_ + 1) return true;

      std::size_t r = m_;
      Rational best;
      Rational ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(d_[i][s]) <= 0) continue;
        ratio = d_[i][n_ + 1] / d_[i][s];
        if (r == m_ || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == m_) return false;
      pivot(r, s);
    }
  }

  std::size_t m_, n_;
  std::vector<long> basic_, nonbasic_;
  RationalMatrix d_;
};

}  // namespace

LpResult solve_lp(const RationalVector& objective, Sense sense, const HPolytope& polytope) {
  if (objective.size() != polytope.dim) throw std::invalid_argument("solve_lp: objective length != polytope dim");
  LpResult result;

  auto chart = solve_equalities(polytope.dim, polytope.equalities);
  if (!chart) {
    result.status = LpStatus::infeasible;
    return result;
  }
  const std::size_t k = chart->reduced_dim();

  // Inequalities in the chart: g.y <= h.
  RationalMatrix g_rows;
  RationalVector h_values;
  for (const auto& row : polytope.inequalities) {
    RationalVector g(k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      g[j] = dot(row.coeffs, chart->directions[j]);
      nonzero = nonzero || sgn(g[j]) != 0;
    }
    Rational h = row.rhs - dot(row.coeffs, chart->origin);
    if (!nonzero) {
      if (sgn(h) < 0) {
        result.status = LpStatus::infeasible;
        return result;
      }
      continue;
    }
    g_rows.push_back(std::move(g));
    h_values.push_back(std::move(h));
  }

  RationalVector c(k);
  for (std::size_t j = 0; j < k; ++j) {
    c[j] = dot(objective, chart->directions[j]);
    if (sense == Sense::minimize) c[j] = -c[j];
  }

  if (k == 0) {
    result.status = LpStatus::optimal;
    result.witness = chart->origin;
    result.value = dot(objective, result.witness);
    return result;
  }

  // Single-variable lower bounds become shifts y_j = L_j + z_j with z_j >= 0;
  // unbounded-below coordinates are split into z+ - z-.
  std::vector<std::optional<Rational>> lower(k);
  std::vector<bool> bound_row(g_rows.size(), false);
  for (std::size_t r = 0; r < g_rows.size(); ++r) {
    std::size_t support = 0, var = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(g_rows[r][j]) != 0) {
        ++support;
        var = j;
      }
    if (support != 1 || sgn(g_rows[r][var]) > 0) continue;
    Rational bound = h_values[r] / g_rows[r][var];
    if (!lower[var] || bound > *lower[var]) lower[var] = bound;
    bound_row[r] = true;
  }

  std::vector<std::size_t> first_col(k);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < k; ++j) {
    first_col[j] = cols;
    cols += lower[j] ? 1 : 2;
  }

  RationalMatrix a;
  RationalVector b;
  for (std::size_t r = 0; r < g_rows.size(); ++r) {
    if (bound_row[r]) continue;
    RationalVector row(cols);
    Rational rhs = h_values[r];
    for (std::size_t j = 0; j < k; ++j) {
      const Rational& coef = g_rows[r][j];
      if (sgn(coef) == 0) continue;
      row[first_col[j]] = coef;
      if (lower[j])
        rhs -= coef * *lower[j];
      else
        row[first_col[j] + 1] = -coef;
    }
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
  RationalVector c_split(cols);
  for (std::size_t j = 0; j < k; ++j) {
    c_split[first_col[j]] = c[j];
    if (!lower[j]) c_split[first_col[j] + 1] = -c[j];
  }

  Tableau tableau(a, b, c_split);
  RationalVector z;
  Rational ignored;
  result.status = tableau.solve(z, ignored);
  if (!result.optimal()) return result;

  RationalVector y(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (lower[j])
      y[j] = *lower[j] + z[first_col[j]];
    else
      y[j] = z[first_col[j]] - z[first_col[j] + 1];
  }
  result.witness = chart->lift(y);
  result.value = dot(objective, result.witness);
  assert(polytope.contains(result.witness));
  return result;
}

HPolytope optimal_face(const RationalVector& objective, Sense sense, const HPolytope& polytope) {
  LpResult lp = solve_lp(objective, sense, polytope);
  if (!lp.optimal()) throw LpError(lp.status, "optimal_face: LP is " + to_string(lp.status));
  HPolytope face = polytope;
  if (std::any_of(objective.begin(), objective.end(), [](const Rational& v) { return sgn(v) != 0; }))
    face.add_equality(objective, lp.value);
  return face;
}

}  // namespace mcenter
