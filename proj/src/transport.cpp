#include "mcenter/transport.hpp"

namespace mcenter {

Measure::Measure(FiniteMetricSpace space, RationalVector weights) : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size()) throw TransportError("measure length does not match space size");
  Rational total = 0;
  for (auto& w : weights_) {
    w.canonicalize();
    if (sgn(w) < 0) throw TransportError("measure has a negative weight");
    total += w;
  }
  if (total != 1) throw TransportError("measure weights sum to " + to_string(total) + ", not 1");
}

Measure Measure::dirac(const FiniteMetricSpace& space, std::size_t point) {
  RationalVector w(space.size());
  w.at(point) = 1;
  return Measure(space, std::move(w));
}

Measure Measure::uniform(const FiniteMetricSpace& space) {
  return Measure(space, RationalVector(space.size(), Rational(1, space.size())));
}

bool is_coupling(const Coupling& plan, const RationalVector& first, const RationalVector& second) {
  if (plan.matrix.size() != first.size()) return false;
  RationalVector cols(second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (plan.matrix[i].size() != second.size()) return false;
    Rational row = 0;
    for (std::size_t j = 0; j < second.size(); ++j) {
      if (sgn(plan.matrix[i][j]) < 0) return false;
      row += plan.matrix[i][j];
      cols[j] += plan.matrix[i][j];
    }
    if (row != first[i]) return false;
  }
  return cols == second;
}

bool is_lipschitz(const FiniteMetricSpace& space, const RationalVector& f) {
  if (f.size() != space.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f[i] - f[j] > space.distance(i, j)) return false;
  return true;
}

HPolytope lipschitz_polytope(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  HPolytope p(n);
  RationalVector pin(n);
  pin[0] = 1;
  p.add_equality(std::move(pin), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RationalVector row(n);
      row[i] = 1;
      row[j] = -1;
      p.add_inequality(std::move(row), space.distance(i, j));
    }
  return p;
}

VPolytope lipschitz_vertices(const FiniteMetricSpace& space, const VertexOptions& options) {
  return enumerate_vertices(lipschitz_polytope(space), options);
}

Rational kantorovich_from_potentials(const VPolytope& potentials, const RationalVector& a, const RationalVector& b) {
  RationalVector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  Rational best = 0;
  for (const auto& f : potentials.vertices) {
    Rational v = dot(f, diff);
    if (v > best) best = v;
  }
  return best;
}

KantorovichResult kantorovich(const Measure& mu, const Measure& nu) {
  if (!mu.space().same_metric(nu.space())) throw TransportError("kantorovich: measures live on different spaces");
  const FiniteMetricSpace& space = mu.space();
  const std::size_t n = space.size();

  // Primal: min sum d_ij g_ij over couplings g (variable i*n + j).
  HPolytope couplings(n * n);
  for (std::size_t v = 0; v < n * n; ++v) {
    RationalVector row(n * n);
    row[v] = -1;
    couplings.add_inequality(std::move(row), 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(n * n), col(n * n);
    for (std::size_t j = 0; j < n; ++j) {
      row[i * n + j] = 1;
      col[j * n + i] = 1;
    }
    couplings.add_equality(std::move(row), mu[i]);
    couplings.add_equality(std::move(col), nu[i]);
  }
  RationalVector cost(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = space.distance(i, j);
  LpResult primal = solve_lp(cost, Sense::minimize, couplings);
  if (!primal.optimal()) throw std::logic_error("kantorovich: transportation LP is " + to_string(primal.status));

  // Dual: max <f, mu - nu> over pinned 1-Lipschitz f.
  RationalVector diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = mu[i] - nu[i];
  LpResult dual = solve_lp(diff, Sense::maximize, lipschitz_polytope(space));
  if (!dual.optimal()) throw std::logic_error("kantorovich: potential LP is " + to_string(dual.status));
  if (dual.value != primal.value)
    throw std::logic_error("kantorovich: duality gap " + to_string(primal.value - dual.value));

  KantorovichResult result;
  result.value = primal.value;
  result.plan.matrix.assign(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) result.plan.matrix[i][j] = primal.witness[i * n + j];
  result.potential.values = dual.witness;
  return result;
}

Measure pushforward(const Measure& mu, const std::vector<std::size_t>& map, const FiniteMetricSpace& target) {
  if (map.size() != mu.size()) throw TransportError("pushforward: map length does not match measure");
  RationalVector w(target.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= target.size()) throw TransportError("pushforward: map leaves the target space");
    w[map[i]] += mu[i];
  }
  return Measure(target, std::move(w));
}

Measure pushforward(const Measure& mu, const std::vector<std::size_t>& map) { return pushforward(mu, map, mu.space()); }

}  // namespace mcenter
