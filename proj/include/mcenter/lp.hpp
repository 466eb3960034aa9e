#ifndef MCENTER_LP_HPP
#define MCENTER_LP_HPP

#include "mcenter/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcenter {

/// One linear row: <coeffs, x> (<= or =) rhs, depending on where it is stored.
struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Polyhedron {x : A x <= b, E x = e} in exact arithmetic.
struct HPolytope {
  std::size_t dim = 0;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equalities;

  HPolytope() = default;
  explicit HPolytope(std::size_t dimension) : dim(dimension) {}

  void add_inequality(RationalVector coeffs, Rational rhs);
  void add_equality(RationalVector coeffs, Rational rhs);

  bool contains(const RationalVector& point) const;
};

/// Finite point set, deduplicated and sorted lexicographically.
struct VPolytope {
  std::size_t dim = 0;
  std::vector<RationalVector> vertices;

  std::size_t size() const { return vertices.size(); }
};

enum class Sense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

std::string to_string(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RationalVector witness;

  bool optimal() const { return status == LpStatus::optimal; }
};

class LpError : public std::runtime_error {
 public:
  LpError(LpStatus status, const std::string& what) : std::runtime_error(what), status_(status) {}
  LpStatus status() const { return status_; }

 private:
  LpStatus status_;
};

/// Raised when an enumeration would exceed its configured size bound.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::size_t count, std::size_t cap, const std::string& what)
      : std::runtime_error(what + " (count " + std::to_string(count) + " exceeds cap " + std::to_string(cap) + ")"),
        count_(count),
        cap_(cap) {}
  std::size_t count() const { return count_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t count_;
  std::size_t cap_;
};

/// Exact simplex (Bland's rule, two phases). Equalities are eliminated into a
/// reduced chart first; the witness is reported in the original coordinates.
LpResult solve_lp(const RationalVector& objective, Sense sense, const HPolytope& polytope);

/// polytope ∩ {<objective, x> = optimum}. Throws LpError when the LP has no
/// finite optimum. A zero objective returns the polytope unchanged.
HPolytope optimal_face(const RationalVector& objective, Sense sense, const HPolytope& polytope);

enum class VertexMethod {
  double_description,  // incremental cone intersection
  basis_enumeration,   // every choice of dim active rows; small problems only
};

struct VertexOptions {
  VertexMethod method = VertexMethod::double_description;
  std::size_t max_vertices = 200000;   // rays kept alive during double description
  std::size_t max_bases = 5000000;     // basis subsets tried by basis enumeration
};

/// Extreme points of a nonempty bounded polytope. Throws LpError(infeasible)
/// for an empty polytope, LpError(unbounded) when a recession direction
/// exists and CapExceededError when the configured bound is hit.
VPolytope enumerate_vertices(const HPolytope& polytope, const VertexOptions& options = {});

/// Drops inequalities that are strict at every listed vertex. For a bounded
/// polytope whose full vertex list is given, such rows are redundant.
HPolytope drop_slack_inequalities(const HPolytope& polytope, const VPolytope& vertices);

/// Affine parametrization x = origin + sum_j y_j * directions[j] of the
/// solution set of the equalities; nullopt when they are inconsistent.
struct AffineChart {
  RationalVector origin;
  RationalMatrix directions;  // one column per free coordinate, stored as rows

  std::size_t reduced_dim() const { return directions.size(); }
  RationalVector lift(const RationalVector& reduced) const;
};

std::optional<AffineChart> solve_equalities(std::size_t dim, const std::vector<LinearConstraint>& equalities);

/// Solves the square system A x = b; nullopt when A is singular.
std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b);

/// Rank of a rational matrix (rows of equal length).
std::size_t matrix_rank(RationalMatrix rows);

}  // namespace mcenter

#endif  // MCENTER_LP_HPP
