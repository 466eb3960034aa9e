#ifndef MCENTER_QUOTIENT_HPP
#define MCENTER_QUOTIENT_HPP

#include "mcenter/isometry.hpp"
#include "mcenter/metric.hpp"

#include <stdexcept>
#include <vector>

namespace mcenter {

/// Orbit space of a finite metric space under its isometry group, with the
/// greatest pseudometric making the projection nonexpansive.
struct QuotientSpace {
  FiniteMetricSpace base;
  OrbitPartition partition;
  FiniteMetricSpace space;             // points = orbits, in partition order
  std::vector<std::size_t> projection;  // base index -> quotient index
};

/// The quotient metric came out degenerate; only an isometry bug can cause it.
class QuotientError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Weight w([a],[b]) = min over representatives, closed under shortest paths.
QuotientSpace quotient(const FiniteMetricSpace& x);
QuotientSpace quotient(const FiniteMetricSpace& x, const IsometryGroup& group);

/// Independent LP route to the quotient metric:
///   max f(a) - f(b)  over orbit functions f with |f(π x) - f(π y)| <= d(x, y).
Rational quotient_dual_distance(const QuotientSpace& q, std::size_t a, std::size_t b);

struct QuotientTower {
  std::vector<FiniteMetricSpace> levels;      // X^(0), X^(1), ..., terminal
  std::vector<QuotientSpace> steps;           // steps[k] : levels[k] -> levels[k+1]
  std::vector<Rational> diameters;            // diameters[k] = δ(levels[k])
  bool quasi_nilpotent = false;

  const FiniteMetricSpace& terminal() const { return levels.back(); }
};

/// Quotients until a level has a trivial isometry group; from there on the
/// quotient map is a bijective isometry and the tower is constant.
QuotientTower quotient_tower(const FiniteMetricSpace& x);

}  // namespace mcenter

#endif  // MCENTER_QUOTIENT_HPP
