#ifndef MCENTER_CENTRAL_HPP
#define MCENTER_CENTRAL_HPP

#include "mcenter/isometry.hpp"
#include "mcenter/lp.hpp"
#include "mcenter/metric.hpp"
#include "mcenter/quotient.hpp"
#include "mcenter/transport.hpp"

#include <stdexcept>
#include <vector>

namespace mcenter {

class CentralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotQuasiNilpotentError : public std::runtime_error {
 public:
  explicit NotQuasiNilpotentError(FiniteMetricSpace terminal)
      : std::runtime_error("space is not quasi-nilpotent: the quotient tower ends in " +
                           std::to_string(terminal.size()) + " points"),
        terminal_(std::move(terminal)) {}
  const FiniteMetricSpace& terminal() const { return terminal_; }

 private:
  FiniteMetricSpace terminal_;
};

/// One level C^k(Prob(X)) of the Chebyshev tower in the measure simplex,
/// in weight coordinates.
///
/// `radius` is the Chebyshev radius of the previous level, i.e. the value
/// that cut this face out; level 0 carries δ(X), which bounds every
/// Kantorovich distance on Prob(X).
struct MeasureTowerLevel {
  HPolytope face;
  VPolytope vertices;
  Rational radius;
  Rational w_diameter;  // max Kantorovich distance between two vertices
};

struct CentralMeasureResult {
  Measure measure;
  std::vector<MeasureTowerLevel> levels;
  bool exact = false;          // terminal face is a single measure
  Rational residual_diameter;  // Kantorovich diameter of the terminal face
};

enum class RadiusMethod {
  coupling,    // one coupling block per non-Dirac vertex
  potentials,  // Lipschitz-vertex linearization
};

struct CentralOptions {
  std::size_t max_iter = 16;
  std::size_t max_points = 8;
  RadiusMethod radius_method = RadiusMethod::coupling;
  VertexOptions vertex_options;
};

/// {w in R^n : w >= 0, sum w = 1}.
HPolytope prob_polytope(const FiniteMetricSpace& x);

MeasureTowerLevel initial_level(const FiniteMetricSpace& x, const VPolytope& potentials);

/// Kantorovich diameter of a vertex list, via the potential vertices.
Rational w_diameter(const VPolytope& vertices, const VPolytope& potentials);

/// min over the face of the worst Kantorovich distance to the face's vertices.
Rational level_radius(const FiniteMetricSpace& x, const MeasureTowerLevel& level, const VPolytope& potentials,
                      RadiusMethod method);

/// Chebyshev center of the level's face; the returned level's `radius` is the
/// radius of the input level.
MeasureTowerLevel chebyshev_step(const FiniteMetricSpace& x, const MeasureTowerLevel& level,
                                 const VPolytope& potentials, const CentralOptions& options = {});
MeasureTowerLevel chebyshev_step(const FiniteMetricSpace& x, const MeasureTowerLevel& level,
                                 const CentralOptions& options = {});

/// Iterates chebyshev_step until the face is one measure or max_iter steps ran.
CentralMeasureResult central_measure(const FiniteMetricSpace& x, const CentralOptions& options = {});

/// Measures fixed by every isometry: Prob(X) plus w[g(i)] = w[i].
HPolytope fix_polytope(const FiniteMetricSpace& x);
HPolytope fix_polytope(const FiniteMetricSpace& x, const IsometryGroup& group);

bool is_invariant(const Measure& mu, const IsometryGroup& group);

/// Second-kind central measure: lift the point mass of the terminal singleton
/// down the quotient tower, spreading each orbit's mass uniformly over it.
Measure lambda_measure(const FiniteMetricSpace& x);
Measure lambda_measure(const FiniteMetricSpace& x, const QuotientTower& tower);

struct TheoremIsoCheck {
  bool holds = false;
  Rational base_distance;      // W on X
  Rational quotient_distance;  // W on X^(1) between the projected measures
};

/// Compares W(mu1, mu2) with the distance of their projections to X^(1).
/// Both measures must be invariant; throws std::invalid_argument otherwise.
TheoremIsoCheck verify_theorem_iso(const FiniteMetricSpace& x, const Measure& mu1, const Measure& mu2);

}  // namespace mcenter

#endif  // MCENTER_CENTRAL_HPP
