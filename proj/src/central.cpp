#include "mcenter/central.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace mcenter {

HPolytope prob_polytope(const FiniteMetricSpace& x) {
  const std::size_t n = x.size();
  HPolytope p(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(n);
    row[i] = -1;
    p.add_inequality(std::move(row), 0);
  }
  p.add_equality(RationalVector(n, Rational(1)), 1);
  return p;
}

Rational w_diameter(const VPolytope& vertices, const VPolytope& potentials) {
  Rational best = 0;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      Rational w = kantorovich_from_potentials(potentials, vertices.vertices[a], vertices.vertices[b]);
      if (w > best) best = w;
    }
  return best;
}

MeasureTowerLevel initial_level(const FiniteMetricSpace& x, const VPolytope& potentials) {
  MeasureTowerLevel level;
  level.face = prob_polytope(x);
  level.vertices.dim = x.size();
  for (std::size_t i = x.size(); i-- > 0;) {
    RationalVector e(x.size());
    e[i] = 1;
    level.vertices.vertices.push_back(std::move(e));
  }
  level.radius = diameter(x);
  level.w_diameter = w_diameter(level.vertices, potentials);
  return level;
}

namespace {

std::optional<std::size_t> dirac_point(const RationalVector& v) {
  std::optional<std::size_t> point;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (point || v[i] != 1) return std::nullopt;
    point = i;
  }
  return point;
}

RationalVector padded(const RationalVector& coeffs, std::size_t dim) {
  RationalVector out(dim);
  std::copy(coeffs.begin(), coeffs.end(), out.begin());
  return out;
}

// min t  s.t. mu in face and, per vertex v, a coupling of (mu, v) costs <= t.
Rational radius_by_couplings(const FiniteMetricSpace& x, const MeasureTowerLevel& level) {
  const std::size_t n = x.size();
  std::vector<const RationalVector*> general;
  for (const auto& v : level.vertices.vertices)
    if (!dirac_point(v)) general.push_back(&v);
  const std::size_t t = n;
  const std::size_t dim = n + 1 + general.size() * n * n;

  HPolytope lp(dim);
  for (const auto& row : level.face.inequalities) lp.add_inequality(padded(row.coeffs, dim), row.rhs);
  for (const auto& row : level.face.equalities) lp.add_equality(padded(row.coeffs, dim), row.rhs);

  for (const auto& v : level.vertices.vertices) {
    auto point = dirac_point(v);
    if (!point) continue;
    // W(mu, delta_x) = sum_y mu(y) d(x, y)
    RationalVector row(dim);
    for (std::size_t y = 0; y < n; ++y) row[y] = x.distance(*point, y);
    row[t] = -1;
    lp.add_inequality(std::move(row), 0);
  }

  for (std::size_t b = 0; b < general.size(); ++b) {
    const RationalVector& v = *general[b];
    const std::size_t base = n + 1 + b * n * n;
    RationalVector cost(dim);
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector row_sum(dim), col_sum(dim);
      row_sum[i] = -1;
      for (std::size_t j = 0; j < n; ++j) {
        row_sum[base + i * n + j] = 1;
        col_sum[base + j * n + i] = 1;
        cost[base + i * n + j] = x.distance(i, j);

        RationalVector nonneg(dim);
        nonneg[base + i * n + j] = -1;
        lp.add_inequality(std::move(nonneg), 0);
      }
      lp.add_equality(std::move(row_sum), 0);
      lp.add_equality(std::move(col_sum), v[i]);
    }
    cost[t] = -1;
    lp.add_inequality(std::move(cost), 0);
  }

  RationalVector objective(dim);
  objective[t] = 1;
  LpResult result = solve_lp(objective, Sense::minimize, lp);
  if (!result.optimal()) throw std::logic_error("chebyshev radius LP is " + to_string(result.status));
  return result.value;
}

// The Lipschitz potentials binding against the face's vertices: for each f,
// <f, mu> - min_v <f, v> bounds max_v W(mu, v) from below, with equality
// over the full vertex list.
RationalVector potential_offsets(const MeasureTowerLevel& level, const VPolytope& potentials) {
  RationalVector offsets;
  offsets.reserve(potentials.size());
  for (const auto& f : potentials.vertices) {
    Rational best = dot(f, level.vertices.vertices.front());
    for (const auto& v : level.vertices.vertices) {
      Rational value = dot(f, v);
      if (value < best) best = value;
    }
    offsets.push_back(std::move(best));
  }
  return offsets;
}

Rational radius_by_potentials(const FiniteMetricSpace& x, const MeasureTowerLevel& level, const VPolytope& potentials) {
  const std::size_t n = x.size();
  const std::size_t dim = n + 1;
  HPolytope lp(dim);
  for (const auto& row : level.face.inequalities) lp.add_inequality(padded(row.coeffs, dim), row.rhs);
  for (const auto& row : level.face.equalities) lp.add_equality(padded(row.coeffs, dim), row.rhs);
  RationalVector offsets = potential_offsets(level, potentials);
  for (std::size_t k = 0; k < potentials.size(); ++k) {
    RationalVector row = padded(potentials.vertices[k], dim);
    row[n] = -1;
    lp.add_inequality(std::move(row), offsets[k]);
  }
  RationalVector objective(dim);
  objective[n] = 1;
  LpResult result = solve_lp(objective, Sense::minimize, lp);
  if (!result.optimal()) throw std::logic_error("chebyshev radius LP is " + to_string(result.status));
  return result.value;
}

}  // namespace

Rational level_radius(const FiniteMetricSpace& x, const MeasureTowerLevel& level, const VPolytope& potentials,
                      RadiusMethod method) {
  return method == RadiusMethod::coupling ? radius_by_couplings(x, level) : radius_by_potentials(x, level, potentials);
}

MeasureTowerLevel chebyshev_step(const FiniteMetricSpace& x, const MeasureTowerLevel& level,
                                 const VPolytope& potentials, const CentralOptions& options) {
  if (level.vertices.size() == 0) throw std::invalid_argument("chebyshev_step: empty face");
  Rational r = level_radius(x, level, potentials, options.radius_method);

  HPolytope face = level.face;
  RationalVector offsets = potential_offsets(level, potentials);
  for (std::size_t k = 0; k < potentials.size(); ++k)
    face.add_inequality(potentials.vertices[k], r + offsets[k]);

  MeasureTowerLevel next;
  next.vertices = enumerate_vertices(face, options.vertex_options);
  next.face = drop_slack_inequalities(face, next.vertices);
  next.radius = r;
  next.w_diameter = w_diameter(next.vertices, potentials);
  return next;
}

MeasureTowerLevel chebyshev_step(const FiniteMetricSpace& x, const MeasureTowerLevel& level,
                                 const CentralOptions& options) {
  return chebyshev_step(x, level, lipschitz_vertices(x, options.vertex_options), options);
}

CentralMeasureResult central_measure(const FiniteMetricSpace& x, const CentralOptions& options) {
  if (options.max_iter < 1) throw std::invalid_argument("central_measure: max_iter must be at least 1");
  if (x.size() > options.max_points)
    throw CentralError("central_measure: " + std::to_string(x.size()) + " points exceeds the limit of " +
                       std::to_string(options.max_points));

  const VPolytope potentials = lipschitz_vertices(x, options.vertex_options);
  std::vector<MeasureTowerLevel> levels;
  levels.push_back(initial_level(x, potentials));
  for (std::size_t iter = 0; iter < options.max_iter && levels.back().vertices.size() > 1; ++iter)
    levels.push_back(chebyshev_step(x, levels.back(), potentials, options));

  const MeasureTowerLevel& last = levels.back();
  CentralMeasureResult result{Measure(x, last.vertices.vertices.front()), std::move(levels), false, 0};
  result.exact = result.levels.back().vertices.size() == 1;
  result.residual_diameter = result.levels.back().w_diameter;
  return result;
}

HPolytope fix_polytope(const FiniteMetricSpace& x) { return fix_polytope(x, enumerate_isometries(x)); }

HPolytope fix_polytope(const FiniteMetricSpace& x, const IsometryGroup& group) {
  const std::size_t n = x.size();
  HPolytope p = prob_polytope(x);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& g : group.elements)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] != i) pairs.emplace(std::min(i, g[i]), std::max(i, g[i]));
  for (auto [i, j] : pairs) {
    RationalVector row(n);
    row[i] = 1;
    row[j] = -1;
    p.add_equality(std::move(row), 0);
  }
  return p;
}

bool is_invariant(const Measure& mu, const IsometryGroup& group) {
  return std::all_of(group.elements.begin(), group.elements.end(),
                     [&](const Permutation& g) { return pushforward(mu, g) == mu; });
}

Measure lambda_measure(const FiniteMetricSpace& x) { return lambda_measure(x, quotient_tower(x)); }

Measure lambda_measure(const FiniteMetricSpace& x, const QuotientTower& tower) {
  if (!tower.quasi_nilpotent) throw NotQuasiNilpotentError(tower.terminal());
  RationalVector weights{Rational(1)};
  for (std::size_t k = tower.steps.size(); k-- > 0;) {
    const QuotientSpace& step = tower.steps[k];
    RationalVector lifted(step.base.size());
    for (std::size_t p = 0; p < lifted.size(); ++p) {
      std::size_t orbit = step.projection[p];
      lifted[p] = weights[orbit] / Rational(step.partition.orbits[orbit].size());
    }
    weights = std::move(lifted);
  }
  return Measure(x, std::move(weights));
}

TheoremIsoCheck verify_theorem_iso(const FiniteMetricSpace& x, const Measure& mu1, const Measure& mu2) {
  IsometryGroup group = enumerate_isometries(x);
  if (!is_invariant(mu1, group) || !is_invariant(mu2, group))
    throw std::invalid_argument("verify_theorem_iso: measures must be invariant under every isometry");
  QuotientSpace q = quotient(x, group);
  TheoremIsoCheck check;
  check.base_distance = kantorovich(mu1, mu2).value;
  check.quotient_distance =
      kantorovich(pushforward(mu1, q.projection, q.space), pushforward(mu2, q.projection, q.space)).value;
  check.holds = check.base_distance == check.quotient_distance;
  return check;
}

}  // namespace mcenter
