#include "mcenter/quotient.hpp"

#include "mcenter/lp.hpp"

#include <optional>

namespace mcenter {

namespace {

std::string orbit_label(const FiniteMetricSpace& base, const std::vector<std::size_t>& orbit) {
  std::string out = "{";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (i) out += ",";
    out += base.labels()[orbit[i]];
  }
  return out + "}";
}

}  // namespace

QuotientSpace quotient(const FiniteMetricSpace& x) { return quotient(x, enumerate_isometries(x)); }

QuotientSpace quotient(const FiniteMetricSpace& x, const IsometryGroup& group) {
  OrbitPartition partition = orbits(group);
  const std::size_t k = partition.count();

  std::vector<std::vector<std::optional<Rational>>> weight(k, std::vector<std::optional<Rational>>(k));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      auto a = partition.orbit_of[i];
      auto b = partition.orbit_of[j];
      if (!weight[a][b] || x.distance(i, j) < *weight[a][b]) weight[a][b] = x.distance(i, j);
    }

  RationalMatrix dist(k, RationalVector(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) dist[a][b] = a == b ? Rational(0) : *weight[a][b];
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (dist[a][m] + dist[m][b] < dist[a][b]) dist[a][b] = dist[a][m] + dist[m][b];

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (sgn(dist[a][b]) <= 0) throw QuotientError("quotient metric vanishes between distinct orbits");

  std::vector<std::string> labels;
  for (const auto& orbit : partition.orbits) labels.push_back(orbit_label(x, orbit));

  QuotientSpace q{x, partition, FiniteMetricSpace::validate(std::move(dist), std::move(labels)), partition.orbit_of};
  return q;
}

Rational quotient_dual_distance(const QuotientSpace& q, std::size_t a, std::size_t b) {
  const std::size_t k = q.space.size();
  if (a >= k || b >= k) throw std::out_of_range("quotient_dual_distance: orbit index out of range");
  if (a == b) return 0;

  HPolytope feasible(k);
  {
    RationalVector pin(k);
    pin[b] = 1;
    feasible.add_equality(std::move(pin), 0);
  }
  const FiniteMetricSpace& base = q.base;
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y) {
      auto px = q.projection[x];
      auto py = q.projection[y];
      if (px == py) continue;
      RationalVector row(k);
      row[px] = 1;
      row[py] = -1;
      feasible.add_inequality(std::move(row), base.distance(x, y));
    }

  RationalVector objective(k);
  objective[a] = 1;
  objective[b] = -1;
  LpResult lp = solve_lp(objective, Sense::maximize, feasible);
  if (!lp.optimal()) throw LpError(lp.status, "quotient_dual_distance: LP is " + to_string(lp.status));
  return lp.value;
}

QuotientTower quotient_tower(const FiniteMetricSpace& x) {
  QuotientTower tower;
  tower.levels.push_back(x);
  tower.diameters.push_back(diameter(x));
  for (;;) {
    IsometryGroup group = enumerate_isometries(tower.levels.back());
    if (group.trivial()) break;
    QuotientSpace step = quotient(tower.levels.back(), group);
    tower.levels.push_back(step.space);
    tower.diameters.push_back(diameter(step.space));
    tower.steps.push_back(std::move(step));
  }
  tower.quasi_nilpotent = tower.terminal().size() == 1;
  return tower;
}

}  // namespace mcenter
