#include "mcenter/isometry.hpp"
#include "mcenter/sampler.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace mcenter;
using namespace mcenter::test;

namespace {

RationalMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  RationalMatrix m;
  for (auto row : rows) m.push_back(vec(row));
  return m;
}

std::vector<FiniteMetricSpace> sample_spaces() {
  std::vector<FiniteMetricSpace> out{singleton(), two_point(), grid_space(3), grid_space(5), equilateral_space(4),
                                     cycle_space(6), symmetric_group_space(3)};
  for (std::uint64_t seed = 0; seed < 20; ++seed) out.push_back(random_space(2 + seed % 5, seed, 2, 2));
  return out;
}

}  // namespace

TEST_SUITE("sampler") {
  TEST_CASE("embeddings of short prefixes") {
    FiniteMetricSpace g = grid_space(3);
    CHECK(embeddings(g, mat({{"0"}})) == std::vector<PointTuple>{{0}, {1}, {2}});
    RationalMatrix ends = mat({{"0", "1"}, {"1", "0"}});
    CHECK(embeddings(g, ends) == std::vector<PointTuple>{{0, 2}, {2, 0}});
    CHECK(embeddings(g, ends) == oracle::naive_embeddings(g, ends));
    CHECK(embeddings(equilateral_space(3), ends).size() == 6);
    CHECK_THROWS_AS(embeddings(g, mat({{"0", "2"}, {"2", "0"}})), SamplerError);
  }

  TEST_CASE("greedy steps on grid(3)") {
    FiniteMetricSpace g = grid_space(3);
    ExtendResult s1 = extend(g, initial_state(g));
    CHECK(s1.row == vec({"1", "0"}));
    CHECK(s1.state.rho == mat({{"0", "1"}, {"1", "0"}}));
    ExtendResult s2 = extend(g, s1.state);
    CHECK(s2.row == vec({"1/2", "1/2", "0"}));
    CHECK(s2.state.tuples == std::vector<PointTuple>{{0, 2, 1}, {2, 0, 1}});

    oracle::NaiveStep n1 = oracle::naive_extend(g, mat({{"0"}}));
    CHECK(n1.row == s1.row);
    oracle::NaiveStep n2 = oracle::naive_extend(g, s1.state.rho);
    CHECK(n2.row == s2.row);
    CHECK(n2.tuples == s2.state.tuples);
  }

  TEST_CASE("third step on grid(5): both mirror tuples survive") {
    FiniteMetricSpace g = grid_space(5);
    EmbeddingState s = initial_state(g);
    for (int k = 0; k < 2; ++k) s = extend(g, s).state;
    ExtendResult s3 = extend(g, s);
    CHECK(s3.row == vec({"3/4", "1/4", "1/4", "0"}));
    CHECK(s3.state.tuples.size() == 2);
    oracle::NaiveStep n3 = oracle::naive_extend(g, s.rho);
    CHECK(n3.row == s3.row);
    CHECK(n3.tuples == s3.state.tuples);
  }

  TEST_CASE("every step matches the naive construction") {
    for (const auto& x : sample_spaces()) {
      EmbeddingState s = initial_state(x);
      while (s.prefix_length() < x.size()) {
        oracle::NaiveStep naive = oracle::naive_extend(x, s.rho);
        ExtendResult r = extend(x, s);
        CHECK(r.row == naive.row);
        CHECK(r.max_min_distance == naive.max_min);
        CHECK(r.state.tuples == naive.tuples);
        CHECK(r.state.tuples == embeddings(x, r.state.rho));
        // The new point sits at the max-min distance from the placed prefix.
        Rational nearest = *std::min_element(r.row.begin(), r.row.end() - 1);
        CHECK(nearest == r.max_min_distance);
        s = r.state;
      }
    }
  }

  TEST_CASE("canonical metrics of the named spaces") {
    CanonicalOrder two = canonical_metric(two_point());
    CHECK(two.rho == mat({{"0", "1"}, {"1", "0"}}));
    CanonicalOrder g = canonical_metric(grid_space(3));
    CHECK(g.rho == mat({{"0", "1", "1/2"}, {"1", "0", "1/2"}, {"1/2", "1/2", "0"}}));
    CHECK(g.representation == PointTuple{0, 2, 1});
    CHECK(g.point_at(7) == 1);
    CanonicalOrder e = canonical_metric(equilateral_space(3));
    CHECK(e.rho == mat({{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}}));
    CanonicalOrder s = canonical_metric(singleton());
    CHECK(s.rho == mat({{"0"}}));
    CHECK(s.representation == PointTuple{0});
  }

  TEST_CASE("representation counts equal the isometry group order") {
    CHECK(canonical_metric(generic_space(4, 6)).all_representations_count == 1);
    CHECK(canonical_metric(grid_space(3)).all_representations_count == 2);
    CHECK(canonical_metric(equilateral_space(3)).all_representations_count == 6);
    for (const auto& x : sample_spaces()) {
      CanonicalOrder c = canonical_metric(x);
      CHECK(c.all_representations_count == oracle::brute_force_isometries(x).size());
      CHECK(representations(x, c).size() == c.all_representations_count);
      PointTuple sorted = c.representation;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == identity_permutation(x.size()));
    }
  }

  TEST_CASE("canonical metric is invariant under relabeling") {
    std::mt19937_64 rng(81);
    for (const auto& x : sample_spaces())
      for (int k = 0; k < 3; ++k) CHECK(canonical_metric(x.relabel(oracle::random_permutation(x.size(), rng))).rho == canonical_metric(x).rho);
  }

  TEST_CASE("orbit sequences") {
    CHECK(canonical_orbit_sequence(grid_space(3)) == std::vector<std::size_t>{0, 0, 1});
    CHECK(canonical_orbit_sequence(cycle_space(5)) == std::vector<std::size_t>(5, 0));
    CHECK(canonical_orbit_sequence(singleton()) == std::vector<std::size_t>{0});
  }

  TEST_CASE("size guard") {
    CHECK_THROWS_AS(canonical_metric(grid_space(11)), std::invalid_argument);
    CHECK(canonical_metric(grid_space(11), {11}).representation.size() == 11);
  }
}
