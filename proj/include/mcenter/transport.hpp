#ifndef MCENTER_TRANSPORT_HPP
#define MCENTER_TRANSPORT_HPP

#include "mcenter/lp.hpp"
#include "mcenter/metric.hpp"

#include <stdexcept>
#include <vector>

namespace mcenter {

class TransportError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Probability vector on the points of a space: nonnegative, sums to 1.
class Measure {
 public:
  Measure(FiniteMetricSpace space, RationalVector weights);

  static Measure dirac(const FiniteMetricSpace& space, std::size_t point);
  static Measure uniform(const FiniteMetricSpace& space);

  const FiniteMetricSpace& space() const { return space_; }
  const RationalVector& weights() const { return weights_; }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }

  friend bool operator==(const Measure& a, const Measure& b) { return a.weights_ == b.weights_; }

 private:
  FiniteMetricSpace space_;
  RationalVector weights_;
};

struct Coupling {
  RationalMatrix matrix;  // rows follow the first marginal, columns the second
};

/// 1-Lipschitz function on the points, pinned to 0 at point 0.
struct LipschitzPotential {
  RationalVector values;
};

struct KantorovichResult {
  Rational value;
  Coupling plan;
  LipschitzPotential potential;
};

/// Transportation LP and its Lipschitz dual, solved independently; throws
/// std::logic_error if the two optima differ.
KantorovichResult kantorovich(const Measure& mu, const Measure& nu);

/// weights'[map[i]] += weights[i] on the target space.
Measure pushforward(const Measure& mu, const std::vector<std::size_t>& map, const FiniteMetricSpace& target);
/// Transport along a self-map of the measure's own space.
Measure pushforward(const Measure& mu, const std::vector<std::size_t>& map);

/// {f : f_i - f_j <= d(i,j), f_0 = 0} as an H-polytope in R^n.
HPolytope lipschitz_polytope(const FiniteMetricSpace& space);

/// Every vertex of the pinned Lipschitz polytope.
VPolytope lipschitz_vertices(const FiniteMetricSpace& space, const VertexOptions& options = {});

/// max over the given potentials of <f, a - b>; equals the Kantorovich
/// distance when `potentials` is the full Lipschitz vertex list.
Rational kantorovich_from_potentials(const VPolytope& potentials, const RationalVector& a, const RationalVector& b);

bool is_coupling(const Coupling& plan, const RationalVector& first, const RationalVector& second);
bool is_lipschitz(const FiniteMetricSpace& space, const RationalVector& f);

}  // namespace mcenter

#endif  // MCENTER_TRANSPORT_HPP
