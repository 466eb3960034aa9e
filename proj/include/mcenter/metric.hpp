#ifndef MCENTER_METRIC_HPP
#define MCENTER_METRIC_HPP

#include "mcenter/rational.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcenter {

using Permutation = std::vector<std::size_t>;

/// Metric axiom violation, reported with the offending indices.
class MetricError : public std::invalid_argument {
 public:
  enum class Kind { not_square, empty, nonzero_diagonal, asymmetric, zero_distance, negative_distance, triangle, label_count };

  MetricError(Kind kind, std::vector<std::size_t> witness, const std::string& what)
      : std::invalid_argument(what), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<std::size_t> witness_;
};

std::string to_string(MetricError::Kind kind);

/// Validated finite metric space. Immutable; copies share storage.
class FiniteMetricSpace {
 public:
  /// Checks every metric axiom. Missing labels default to "0", "1", ...
  static FiniteMetricSpace validate(RationalMatrix dist, std::vector<std::string> labels = {});

  std::size_t size() const { return data_->dist.size(); }
  const Rational& distance(std::size_t i, std::size_t j) const { return data_->dist[i][j]; }
  const RationalMatrix& matrix() const { return data_->dist; }
  const std::vector<std::string>& labels() const { return data_->labels; }

  /// Space Y with d_Y(perm[i], perm[j]) = d(i, j), so perm is an isometry onto Y.
  FiniteMetricSpace relabel(const Permutation& perm) const;

  /// Same distance matrix (labels ignored).
  bool same_metric(const FiniteMetricSpace& other) const {
    return data_ == other.data_ || data_->dist == other.data_->dist;
  }

 private:
  struct Data {
    RationalMatrix dist;
    std::vector<std::string> labels;
  };
  explicit FiniteMetricSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Nonempty subset of a space, members sorted. Carries a copy of the
/// parent handle, which is cheap.
class Subspace {
 public:
  Subspace(FiniteMetricSpace parent, std::vector<std::size_t> members);
  static Subspace whole(const FiniteMetricSpace& parent);

  const FiniteMetricSpace& parent() const { return parent_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t index) const;
  std::vector<std::string> labels() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.members_ == b.members_; }

 private:
  FiniteMetricSpace parent_;
  std::vector<std::size_t> members_;
};

Rational diameter(const Subspace& a);
Rational diameter(const FiniteMetricSpace& x);

/// Largest distance from x to a point of A; x must belong to A.
Rational eccentricity(const Subspace& a, std::size_t x);

struct ChebyshevCenter {
  Rational radius;
  Subspace center;
};

/// Radius = least eccentricity; center = every point attaining it (ties kept).
ChebyshevCenter chebyshev_center_set(const Subspace& a);

struct ChebyshevTower {
  std::vector<Subspace> levels;  // C^0 = X, C^1, ...; the last level is its own center
  std::vector<Rational> radii;   // radii[k] = r(levels[k])
  bool stabilized = false;

  const Subspace& terminal() const { return levels.back(); }
};

ChebyshevTower chebyshev_tower(const FiniteMetricSpace& x);

struct WeakConvexityReport {
  bool convex = true;
  std::vector<std::pair<std::size_t, std::size_t>> failures;  // pairs with no weakly middle point
};

/// z is a weakly middle point of (x, y) iff for every w:
///   d(z,w) <= max(d(x,w), d(y,w)), and equality forces d(x,w) = d(y,w).
bool is_weakly_middle_point(const FiniteMetricSpace& space, std::size_t x, std::size_t y, std::size_t z);

WeakConvexityReport weak_convexity_check(const FiniteMetricSpace& x);

}  // namespace mcenter

#endif  // MCENTER_METRIC_HPP
