#include "mcenter/metric.hpp"

#include <algorithm>
#include <cassert>

namespace mcenter {

std::string to_string(MetricError::Kind kind) {
  switch (kind) {
    case MetricError::Kind::not_square:
      return "not_square";
    case MetricError::Kind::empty:
      return "empty";
    case MetricError::Kind::nonzero_diagonal:
      return "nonzero_diagonal";
    case MetricError::Kind::asymmetric:
      return "asymmetric";
    case MetricError::Kind::zero_distance:
      return "zero_distance";
    case MetricError::Kind::negative_distance:
      return "negative_distance";
    case MetricError::Kind::triangle:
      return "triangle";
    case MetricError::Kind::label_count:
      return "label_count";
  }
  return "unknown";
}

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::validate(RationalMatrix dist, std::vector<std::string> labels) {
  const std::size_t n = dist.size();
  if (n == 0) throw MetricError(MetricError::Kind::empty, {}, "metric space must have at least one point");
  for (std::size_t i = 0; i < n; ++i)
    if (dist[i].size() != n)
      throw MetricError(MetricError::Kind::not_square, {i}, "row " + std::to_string(i) + " has wrong length");
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != n) {
    throw MetricError(MetricError::Kind::label_count, {labels.size(), n}, "label count does not match matrix size");
  }
  for (auto& row : dist)
    for (auto& v : row) v.canonicalize();

  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(dist[i][i]) != 0)
      throw MetricError(MetricError::Kind::nonzero_diagonal, {i, i}, "nonzero diagonal at " + pair_text(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i])
        throw MetricError(MetricError::Kind::asymmetric, {i, j}, "asymmetric distance at " + pair_text(i, j));
      if (sgn(dist[i][j]) < 0)
        throw MetricError(MetricError::Kind::negative_distance, {i, j}, "negative distance at " + pair_text(i, j));
      if (sgn(dist[i][j]) == 0)
        throw MetricError(MetricError::Kind::zero_distance, {i, j}, "zero distance between distinct points " + pair_text(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist[i][k] > dist[i][j] + dist[j][k])
          throw MetricError(MetricError::Kind::triangle, {i, j, k},
                            "triangle inequality fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + "): " + to_string(dist[i][k]) + " > " + to_string(dist[i][j]) +
                                " + " + to_string(dist[j][k]));

  return FiniteMetricSpace(std::make_shared<const Data>(Data{std::move(dist), std::move(labels)}));
}

FiniteMetricSpace FiniteMetricSpace::relabel(const Permutation& perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw std::invalid_argument("relabel: permutation length != space size");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("relabel: not a permutation");
    seen[p] = true;
  }
  RationalMatrix dist(n, RationalVector(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[perm[i]] = labels()[i];
    for (std::size_t j = 0; j < n; ++j) dist[perm[i]][perm[j]] = distance(i, j);
  }
  return FiniteMetricSpace(std::make_shared<const Data>(Data{std::move(dist), std::move(names)}));
}

Subspace::Subspace(FiniteMetricSpace parent, std::vector<std::size_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw std::invalid_argument("subspace must be nonempty");
  if (members_.back() >= parent_.size()) throw std::out_of_range("subspace member outside parent space");
}

Subspace Subspace::whole(const FiniteMetricSpace& parent) {
  std::vector<std::size_t> all(parent.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subspace(parent, std::move(all));
}

bool Subspace::contains(std::size_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

std::vector<std::string> Subspace::labels() const {
  std::vector<std::string> out;
  for (auto m : members_) out.push_back(parent_.labels()[m]);
  return out;
}

Rational diameter(const Subspace& a) {
  Rational best = 0;
  for (auto i : a.members())
    for (auto j : a.members())
      if (a.parent().distance(i, j) > best) best = a.parent().distance(i, j);
  return best;
}

Rational diameter(const FiniteMetricSpace& x) { return diameter(Subspace::whole(x)); }

Rational eccentricity(const Subspace& a, std::size_t x) {
  if (!a.contains(x)) throw std::invalid_argument("eccentricity: point not in subspace");
  Rational best = 0;
  for (auto y : a.members())
    if (a.parent().distance(x, y) > best) best = a.parent().distance(x, y);
  return best;
}

ChebyshevCenter chebyshev_center_set(const Subspace& a) {
  std::vector<Rational> ecc;
  ecc.reserve(a.size());
  for (auto x : a.members()) ecc.push_back(eccentricity(a, x));
  Rational radius = *std::min_element(ecc.begin(), ecc.end());
  std::vector<std::size_t> center;
  for (std::size_t i = 0; i < ecc.size(); ++i)
    if (ecc[i] == radius) center.push_back(a.members()[i]);
  return {radius, Subspace(a.parent(), std::move(center))};
}

ChebyshevTower chebyshev_tower(const FiniteMetricSpace& x) {
  ChebyshevTower tower;
  tower.levels.push_back(Subspace::whole(x));
  for (;;) {
    ChebyshevCenter step = chebyshev_center_set(tower.levels.back());
    tower.radii.push_back(step.radius);
    if (step.center == tower.levels.back()) break;
    assert(step.center.size() < tower.levels.back().size());
    tower.levels.push_back(std::move(step.center));
  }
  tower.stabilized = true;
  return tower;
}

bool is_weakly_middle_point(const FiniteMetricSpace& space, std::size_t x, std::size_t y, std::size_t z) {
  for (std::size_t w = 0; w < space.size(); ++w) {
    const Rational& dx = space.distance(x, w);
    const Rational& dy = space.distance(y, w);
    const Rational& bound = dx > dy ? dx : dy;
    const Rational& dz = space.distance(z, w);
    if (dz > bound) return false;
    if (dz == bound && dx != dy) return false;
  }
  return true;
}

WeakConvexityReport weak_convexity_check(const FiniteMetricSpace& x) {
  WeakConvexityReport report;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      bool found = false;
      for (std::size_t z = 0; z < x.size() && !found; ++z) found = is_weakly_middle_point(x, a, b, z);
      if (!found) report.failures.emplace_back(a, b);
    }
  report.convex = report.failures.empty();
  return report;
}

}  // namespace mcenter
