#ifndef MCENTER_GENERATORS_HPP
#define MCENTER_GENERATORS_HPP

#include "mcenter/metric.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mcenter {

/// Points k/(n-1), k = 0..n-1, with |a - b|. grid(1) is the single point 0.
FiniteMetricSpace grid_space(std::size_t n);

/// n points on a circle of length 1: d(i, j) = min(|i-j|, n-|i-j|)/n.
FiniteMetricSpace cycle_space(std::size_t n);

/// n points at mutual distance `side`.
FiniteMetricSpace equilateral_space(std::size_t n, const Rational& side = 1);

/// n distinct points of {0..side}^dim under L1 distance, scaled by 1/side.
/// Coordinates come from std::mt19937_64(seed) reduced modulo side+1.
FiniteMetricSpace random_space(std::size_t n, std::uint64_t seed, std::size_t dim = 2, std::size_t side = 4);

/// table[a][b] = a·b.
using CayleyTable = std::vector<std::vector<std::size_t>>;

/// Word metric: d(g, h) is the cheapest path g -> g·s -> ... -> h where each
/// step by generator s costs its weight. Weights must be positive, with
/// w(s) = w(s^-1), and the generators must generate the group.
FiniteMetricSpace group_space(const CayleyTable& table, const std::vector<std::pair<std::size_t, Rational>>& generators,
                              std::vector<std::string> labels = {});

/// Z_k under addition; elements 0..k-1.
CayleyTable cyclic_group_table(std::size_t k);

/// S_m; elements are the permutations of 0..m-1 in lexicographic order, so
/// element 0 is the identity. (p·q)(i) = p(q(i)).
CayleyTable symmetric_group_table(std::size_t m);
std::vector<Permutation> symmetric_group_elements(std::size_t m);

/// Z_k with generators ±1 of weight 1.
FiniteMetricSpace cyclic_group_space(std::size_t k);

/// S_m with every transposition as a generator of weight 1.
FiniteMetricSpace symmetric_group_space(std::size_t m);

/// Dispatch used by the command line:
///   grid N | cycle N | equilateral N [SIDE] | random N [DIM [SIDE]] (uses seed)
///   group cyclic:K | group symmetric:M | group FILE.json
/// A group file holds {"table": [[...]], "generators": [[element, "weight"], ...], "labels": [...]}.
FiniteMetricSpace generate(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed);

}  // namespace mcenter

#endif  // MCENTER_GENERATORS_HPP
