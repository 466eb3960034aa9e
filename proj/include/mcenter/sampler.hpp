#ifndef MCENTER_SAMPLER_HPP
#define MCENTER_SAMPLER_HPP

#include "mcenter/metric.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mcenter {

/// Raised when a construction step breaks an invariant the construction
/// guarantees (empty embedding set, tuples disagreeing on the new row, ...).
class SamplerError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using PointTuple = std::vector<std::size_t>;

/// Prefix of the canonical metric plus every tuple realizing it.
struct EmbeddingState {
  RationalMatrix rho;              // (n+1) x (n+1)
  std::vector<PointTuple> tuples;  // all isometric placements, sorted

  std::size_t prefix_length() const { return rho.size(); }
};

/// All tuples (x_0, ..., x_n) with d(x_j, x_k) = rho[j][k], by backtracking.
std::vector<PointTuple> embeddings(const FiniteMetricSpace& x, const RationalMatrix& rho_prefix);

/// State after placing the first point: rho = [[0]], every point a tuple.
EmbeddingState initial_state(const FiniteMetricSpace& x);

struct ExtendResult {
  RationalVector row;     // rho(j, n+1) for j = 0..n+1
  Rational max_min_distance;  // max over F_n x X of min_j d(x_j, x)
  EmbeddingState state;
};

/// Places the next point: keep the (tuple; x) pairs maximizing the distance
/// from x to the tuple, then filter by d(x_0, x), d(x_1, x), ... in turn.
/// The surviving tuples extended by x are exactly the embeddings of the
/// longer prefix.
ExtendResult extend(const FiniteMetricSpace& x, const EmbeddingState& state);

struct CanonicalOrder {
  FiniteMetricSpace space;
  RationalMatrix rho;
  PointTuple representation;  // lexicographically least realization
  std::size_t all_representations_count = 0;

  /// Representation extended past the last index by repeating the final point.
  std::size_t point_at(std::size_t k) const {
    return k < representation.size() ? representation[k] : representation.back();
  }
};

struct SamplerOptions {
  std::size_t max_points = 10;
};

CanonicalOrder canonical_metric(const FiniteMetricSpace& x, const SamplerOptions& options = {});

/// Every realization of rho inside the space; one per isometry.
std::vector<PointTuple> representations(const FiniteMetricSpace& x, const CanonicalOrder& order);

/// Orbit id (see OrbitPartition) of each representation entry. Throws
/// SamplerError if two representations disagree on some orbit.
std::vector<std::size_t> canonical_orbit_sequence(const FiniteMetricSpace& x, const SamplerOptions& options = {});

}  // namespace mcenter

#endif  // MCENTER_SAMPLER_HPP
