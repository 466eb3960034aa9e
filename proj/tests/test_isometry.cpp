#include "mcenter/isometry.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace mcenter;
using namespace mcenter::test;

TEST_SUITE("isometry") {
  TEST_CASE("group orders of the named spaces") {
    CHECK(enumerate_isometries(equilateral_space(3)).order() == 6);
    IsometryGroup g = enumerate_isometries(grid_space(3));
    REQUIRE(g.order() == 2);
    CHECK(g.elements[0] == Permutation{0, 1, 2});
    CHECK(g.elements[1] == Permutation{2, 1, 0});
    CHECK(enumerate_isometries(singleton()).order() == 1);
  }

  TEST_CASE("a generic 4-point space has only the identity") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      FiniteMetricSpace x = generic_space(4, seed * 100);
      CHECK(oracle::brute_force_isometries(x).size() == 1);
      CHECK(enumerate_isometries(x).trivial());
    }
  }

  TEST_CASE("backtracking agrees with the full permutation scan") {
    std::vector<FiniteMetricSpace> spaces{grid_space(4), grid_space(5), cycle_space(5), cycle_space(6),
                                          equilateral_space(5), symmetric_group_space(3), cyclic_group_space(6)};
    for (std::uint64_t seed = 0; seed < 40; ++seed) spaces.push_back(random_space(2 + seed % 6, seed, 2, 2));
    for (const auto& x : spaces) CHECK(enumerate_isometries(x).elements == oracle::brute_force_isometries(x));
  }

  TEST_CASE("orbits") {
    OrbitPartition g = orbits(enumerate_isometries(grid_space(3)));
    CHECK(g.orbits == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
    CHECK(orbits(enumerate_isometries(equilateral_space(3))).count() == 1);
    OrbitPartition t = orbits(enumerate_isometries(generic_space(4, 1)));
    CHECK(t.orbits == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3}});
  }

  TEST_CASE("transitivity") {
    for (std::size_t n = 3; n <= 8; ++n) {
      FiniteMetricSpace x = cycle_space(n);
      for (std::size_t shift = 0; shift < n; ++shift) {
        Permutation rotation(n);
        for (std::size_t i = 0; i < n; ++i) rotation[i] = (i + shift) % n;
        CHECK(is_isometry(x, rotation));
      }
      CHECK(is_transitive(enumerate_isometries(x)));
    }
    CHECK_FALSE(is_transitive(enumerate_isometries(grid_space(3))));
    CHECK(is_transitive(enumerate_isometries(singleton())));
  }

  TEST_CASE("group axioms and orbit-stabilizer") {
    std::vector<FiniteMetricSpace> spaces{grid_space(5), cycle_space(6), equilateral_space(4), symmetric_group_space(3)};
    for (std::uint64_t seed = 0; seed < 20; ++seed) spaces.push_back(random_space(3 + seed % 4, seed, 2, 2));
    for (const auto& x : spaces) {
      IsometryGroup g = enumerate_isometries(x);
      std::set<Permutation> members(g.elements.begin(), g.elements.end());
      CHECK(g.elements.front() == identity_permutation(x.size()));
      for (const auto& a : g.elements) {
        CHECK(members.count(inverse(a)) == 1);
        CHECK(compose(a, inverse(a)) == identity_permutation(x.size()));
        for (const auto& b : g.elements) CHECK(members.count(compose(a, b)) == 1);
      }
      OrbitPartition o = orbits(g);
      for (std::size_t p = 0; p < x.size(); ++p)
        CHECK(o.orbits[o.orbit_of[p]].size() * stabilizer_order(g, p) == g.order());
    }
  }

  TEST_CASE("relabeling conjugates the group") {
    std::mt19937_64 rng(9);
    for (const auto& x : {grid_space(5), cycle_space(6), random_space(5, 3, 2, 2)}) {
      Permutation sigma = oracle::random_permutation(x.size(), rng);
      IsometryGroup gx = enumerate_isometries(x);
      IsometryGroup gy = enumerate_isometries(x.relabel(sigma));
      std::set<Permutation> conjugated;
      for (const auto& g : gx.elements) conjugated.insert(compose(sigma, compose(g, inverse(sigma))));
      CHECK(std::vector<Permutation>(conjugated.begin(), conjugated.end()) == gy.elements);
    }
  }
}
