#ifndef MCENTER_ISOMETRY_HPP
#define MCENTER_ISOMETRY_HPP

#include "mcenter/metric.hpp"

#include <cstddef>
#include <vector>

namespace mcenter {

/// Full isometry group of a finite space, elements in lexicographic order of
/// their permutation words (the identity is first).
struct IsometryGroup {
  FiniteMetricSpace space;
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
  bool trivial() const { return elements.size() == 1; }
};

bool is_isometry(const FiniteMetricSpace& space, const Permutation& perm);

/// Backtracking over images in index order. Candidates must share the
/// sorted distance profile of the source point and agree with every
/// already-assigned pair.
IsometryGroup enumerate_isometries(const FiniteMetricSpace& space);

Permutation compose(const Permutation& outer, const Permutation& inner);  // outer ∘ inner
Permutation inverse(const Permutation& perm);
Permutation identity_permutation(std::size_t n);

struct OrbitPartition {
  std::vector<std::size_t> orbit_of;             // point -> orbit id
  std::vector<std::vector<std::size_t>> orbits;  // sorted; ordered by least member

  std::size_t count() const { return orbits.size(); }
  std::size_t representative(std::size_t orbit) const { return orbits[orbit].front(); }
};

OrbitPartition orbits(const IsometryGroup& group);

bool is_transitive(const IsometryGroup& group);

/// Number of elements fixing `point`.
std::size_t stabilizer_order(const IsometryGroup& group, std::size_t point);

}  // namespace mcenter

#endif  // MCENTER_ISOMETRY_HPP
