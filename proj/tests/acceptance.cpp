// Acceptance gate: one PASS/FAIL line per criterion, exit code 1 if any fails.
#include "mcenter/central.hpp"
#include "mcenter/generators.hpp"
#include "mcenter/isometry.hpp"
#include "mcenter/quotient.hpp"
#include "mcenter/report.hpp"
#include "mcenter/sampler.hpp"
#include "mcenter/transport.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace mcenter;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool holds, const std::string& what) {
    if (!holds) {
      pass = false;
      detail << "\n    failed: " << what;
    }
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.require(seconds < budget_seconds, "runtime " + std::to_string(seconds) + " s over budget " +
                                            std::to_string(budget_seconds) + " s");
  std::printf("criterion %d: %s  %s (%.2f s)%s\n", id, out.pass ? "PASS" : "FAIL", title.c_str(), seconds,
              out.detail.str().c_str());
  std::fflush(stdout);
  return out.pass;
}

FiniteMetricSpace make(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m;
  for (auto row : rows) {
    RationalVector r;
    for (int v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  return FiniteMetricSpace::validate(std::move(m));
}

FiniteMetricSpace two_point() { return make({{0, 1}, {1, 0}}); }

std::vector<std::pair<std::string, FiniteMetricSpace>> transitive_spaces() {
  return {{"cycle(3)", cycle_space(3)},         {"cycle(4)", cycle_space(4)}, {"cycle(5)", cycle_space(5)},
          {"cycle(6)", cycle_space(6)},         {"Z_5", cyclic_group_space(5)},
          {"S_3", symmetric_group_space(3)}};
}

Rational parse(const char* text) { return parse_rational(text); }

RationalVector weights(std::initializer_list<const char*> entries) {
  RationalVector out;
  for (auto e : entries) out.push_back(parse_rational(e));
  return out;
}

void criterion1(Outcome& out) {
  for (const auto& [name, x] : transitive_spaces()) {
    CentralMeasureResult c = central_measure(x);
    Measure uniform = Measure::uniform(x);
    out.require(c.exact, name + ": central measure not exact");
    out.require(c.measure == uniform, name + ": central measure not uniform");
    out.require(lambda_measure(x) == uniform, name + ": lambda not uniform");
  }
}

void criterion2(Outcome& out) {
  for (std::size_t n : {2, 3, 5, 9}) {
    FiniteMetricSpace x = grid_space(n);
    QuotientTower tower = quotient_tower(x);
    out.require(tower.quasi_nilpotent, "grid(" + std::to_string(n) + ") not quasi-nilpotent");
    RationalVector expected(n, Rational(1, n - 1));
    expected.front() = expected.back() = Rational(1, 2 * (n - 1));
    for (auto& v : expected) v.canonicalize();
    out.require(lambda_measure(x, tower).weights() == expected, "grid(" + std::to_string(n) + ") lambda differs");
  }
}

void criterion3(Outcome& out) {
  std::size_t pairs = 0, nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FiniteMetricSpace x = random_space(2 + seed % 5, 3000 + seed, 2, 2);
    QuotientSpace q = quotient(x);
    nontrivial += q.space.size() < x.size();
    for (std::size_t a = 0; a < q.space.size(); ++a)
      for (std::size_t b = 0; b < q.space.size(); ++b, ++pairs)
        out.require(quotient_dual_distance(q, a, b) == q.space.distance(a, b),
                    "seed " + std::to_string(seed) + " pair " + std::to_string(a) + "," + std::to_string(b));
  }
  out.detail << " [" << pairs << " orbit pairs, " << nontrivial << "/100 spaces with a proper quotient]";
}

void criterion4(Outcome& out) {
  std::mt19937_64 rng(4000);
  std::size_t nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FiniteMetricSpace x = random_space(2 + seed % 4, 4000 + seed, 2, 2);
    VPolytope fix = enumerate_vertices(fix_polytope(x));
    nontrivial += fix.size() > 1;
    Measure a(x, fix.vertices[rng() % fix.size()]);
    Measure b(x, fix.vertices[rng() % fix.size()]);
    out.require(verify_theorem_iso(x, a, b).holds, "seed " + std::to_string(seed) + ": W differs in the quotient");
    out.require(w_diameter(fix, lipschitz_vertices(x)) == diameter(quotient(x).space),
                "seed " + std::to_string(seed) + ": W-diameter of invariant measures differs from the quotient diameter");
  }
  out.detail << " [" << nontrivial << "/100 spaces with more than one invariant vertex]";
}

void criterion5(Outcome& out) {
  std::mt19937_64 rng(5000);
  auto certified = [&](const Measure& mu, const Measure& nu) {
    KantorovichResult k = kantorovich(mu, nu);  // throws on a duality gap
    const FiniteMetricSpace& x = mu.space();
    Rational cost = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) cost += k.plan.matrix[i][j] * x.distance(i, j);
    Rational gain = dot(k.potential.values, mu.weights()) - dot(k.potential.values, nu.weights());
    out.require(cost == k.value && gain == k.value && is_coupling(k.plan, mu.weights(), nu.weights()) &&
                    is_lipschitz(x, k.potential.values),
                "duality certificate");
    return k.value;
  };
  for (int trial = 0; trial < 50; ++trial) {
    FiniteMetricSpace x = random_space(2 + trial % 5, 5000 + trial);
    std::size_t p = rng() % x.size(), r = rng() % x.size();
    out.require(certified(Measure::dirac(x, p), Measure::dirac(x, r)) == x.distance(p, r), "Dirac pair");
    Measure mu(x, oracle::random_weights(x.size(), rng));
    Rational mean = 0;
    for (std::size_t y = 0; y < x.size(); ++y) mean += mu[y] * x.distance(p, y);
    out.require(certified(mu, Measure::dirac(x, p)) == mean, "distance to a Dirac");
  }
  for (int trial = 0; trial < 50; ++trial) {
    FiniteMetricSpace x = random_space(2 + trial % 5, 5100 + trial);
    Measure a(x, oracle::random_weights(x.size(), rng)), b(x, oracle::random_weights(x.size(), rng)),
        c(x, oracle::random_weights(x.size(), rng));
    Rational ab = certified(a, b), ba = certified(b, a), bc = certified(b, c), ac = certified(a, c);
    out.require(ab == ba, "symmetry");
    out.require(ac <= ab + bc, "triangle inequality");
    out.require(certified(a, a) == 0, "W(mu, mu) = 0");
    out.require((sgn(ab) == 0) == (a == b), "identity of indiscernibles");
  }
}

void criterion6(Outcome& out) {
  std::vector<std::pair<std::string, FiniteMetricSpace>> spaces = transitive_spaces();
  const std::size_t required = spaces.size() + 1;
  spaces.emplace_back("2-point", two_point());
  for (std::size_t n = 3; n <= 6; ++n) spaces.emplace_back("grid(" + std::to_string(n) + ")", grid_space(n));
  spaces.emplace_back("equilateral(4)", equilateral_space(4));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    spaces.emplace_back("random seed " + std::to_string(6000 + seed), random_space(3 + seed % 3, 6000 + seed, 2, 2));
  std::size_t exact = 0;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    const auto& [name, x] = spaces[k];
    CentralMeasureResult c = central_measure(x);
    if (k < required) out.require(c.exact, name + ": central measure not exact");
    if (!c.exact) continue;
    ++exact;
    for (const auto& g : enumerate_isometries(x).elements)
      out.require(pushforward(c.measure, g) == c.measure, name + ": not invariant");
  }
  out.detail << " [" << exact << "/" << spaces.size() << " spaces exact]";
}

void criterion7(Outcome& out) {
  std::mt19937_64 rng(7000);
  std::vector<std::pair<std::string, FiniteMetricSpace>> spaces;
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    spaces.emplace_back("random seed " + std::to_string(7000 + seed), random_space(2 + seed % 5, 7000 + seed, 2, 2));
  for (std::size_t n = 3; n <= 6; ++n) spaces.emplace_back("grid(" + std::to_string(n) + ")", grid_space(n));
  for (std::size_t n = 3; n <= 5; ++n) spaces.emplace_back("equilateral(" + std::to_string(n) + ")", equilateral_space(n));
  for (const auto& [name, x] : spaces) {
    try {
      CanonicalOrder c = canonical_metric(x);
      out.require(c.all_representations_count == enumerate_isometries(x).order(), name + ": count differs from |Iso|");
      for (int k = 0; k < 5; ++k)
        out.require(canonical_metric(x.relabel(oracle::random_permutation(x.size(), rng))).rho == c.rho,
                    name + ": rho changed under relabeling");
    } catch (const SamplerError& e) {
      out.require(false, name + ": " + e.what());
    }
  }
}

// Every derived example, checked against its brute-force oracle.
void criterion8(Outcome& out) {
  const FiniteMetricSpace two = two_point();
  const FiniteMetricSpace path = make({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  const FiniteMetricSpace grid3 = grid_space(3), grid5 = grid_space(5);
  auto first_step = [](const FiniteMetricSpace& x) {
    VPolytope potentials = lipschitz_vertices(x);
    return chebyshev_step(x, initial_level(x, potentials), potentials);
  };

  {  // minimax radius on the 2-point space, grid 1/1000
    oracle::GridMinimax grid = oracle::grid_minimax(two, 1000);
    MeasureTowerLevel l = first_step(two);
    out.require(grid.value == parse("1/2") && l.radius == grid.value && grid.argmin == l.vertices.vertices,
                "2-point first step vs grid search");
  }
  {  // first face on the 3-point path is a segment; grid 1/200
    oracle::GridMinimax grid = oracle::grid_minimax(path, 200);
    MeasureTowerLevel l = first_step(path);
    std::vector<RationalVector> in_face;
    for (auto& w : oracle::simplex_grid(3, 200))
      if (l.face.contains(w)) in_face.push_back(w);
    out.require(l.vertices.size() == 2 && grid.value == l.radius && grid.argmin == in_face,
                "3-point path first face vs grid search");
  }
  {  // equilateral first step, grid 1/300
    FiniteMetricSpace e = equilateral_space(3);
    oracle::GridMinimax grid = oracle::grid_minimax(e, 300);
    MeasureTowerLevel l = first_step(e);
    out.require(l.radius == parse("2/3") && grid.value == l.radius && grid.argmin == l.vertices.vertices,
                "equilateral first step vs grid search");
  }
  {  // Lipschitz vertices by active sets
    out.require(lipschitz_vertices(two).vertices == oracle::lipschitz_vertices_by_active_sets(two) &&
                    lipschitz_vertices(two).vertices == std::vector<RationalVector>{weights({"0", "-1"}), weights({"0", "1"})},
                "2-point Lipschitz vertices");
    VPolytope g = lipschitz_vertices(grid3);
    out.require(g.vertices == oracle::lipschitz_vertices_by_active_sets(grid3) &&
                    g.vertices == enumerate_vertices(lipschitz_polytope(grid3), {VertexMethod::basis_enumeration}).vertices,
                "grid(3) Lipschitz vertices vs active sets and basis enumeration");
    if (g.size() != 6)
      out.detail << "\n    note: grid(3) pinned Lipschitz polytope has " << g.size()
                 << " vertices by every route; |f(1) - f(0)| <= 1 is implied by the other rows";
  }
  {  // Chebyshev centers and towers by eccentricity tables
    FiniteMetricSpace uneven = FiniteMetricSpace::validate(
        {weights({"0", "1/4", "1"}), weights({"1/4", "0", "3/4"}), weights({"1", "3/4", "0"})});
    ChebyshevCenter c = chebyshev_center_set(Subspace::whole(uneven));
    out.require(c.radius == parse("3/4") && c.center.members() == std::vector<std::size_t>{1}, "{0,1/4,1} center");
    out.require(chebyshev_tower(grid5).terminal().members() == std::vector<std::size_t>{2}, "grid(5) Chebyshev tower");
  }
  {  // weak convexity, exhaustive
    WeakConvexityReport w = weak_convexity_check(two);
    out.require(!w.convex && w.failures.size() == 1, "2-point weak convexity");
    bool none_convex = true;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
      none_convex = none_convex && !weak_convexity_check(random_space(3, 8000 + seed, 2, 6)).convex;
    out.require(none_convex, "random 3-point spaces are never weakly convex");
  }
  {  // isometries by full permutation scan
    bool agree = true;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      FiniteMetricSpace x = random_space(4, 8100 + seed, 3, 40);
      agree = agree && enumerate_isometries(x).elements == oracle::brute_force_isometries(x);
    }
    for (const auto& [name, x] : transitive_spaces()) {
      (void)name;
      agree = agree && enumerate_isometries(x).elements == oracle::brute_force_isometries(x) &&
              is_transitive(enumerate_isometries(x));
    }
    out.require(agree, "isometry groups vs permutation scan");
  }
  {  // quotient metric and dual LP
    QuotientSpace q5 = quotient(grid5);
    out.require(q5.space.matrix() == oracle::quotient_by_point_paths(grid5, q5.partition) && q5.space.size() == 3 &&
                    q5.space.distance(0, 2) == parse("1/2"),
                "grid(5) quotient vs point-path oracle");
    QuotientSpace q3 = quotient(grid3);
    out.require(quotient_dual_distance(q3, 0, 1) == parse("1/2"), "grid(3) dual LP distance");
    bool trivial = true;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      FiniteMetricSpace x = random_space(4, 8200 + seed, 3, 40);
      if (oracle::brute_force_isometries(x).size() != 1) continue;
      QuotientTower t = quotient_tower(x);
      trivial = trivial && !t.quasi_nilpotent && t.terminal().same_metric(x);
    }
    out.require(trivial, "trivial-group towers stop at X");
  }
  {  // transport
    bool ok = true;
    for (int pn = 0; pn <= 4; ++pn)
      for (int qn = 0; qn <= 4; ++qn) {
        Rational p(pn, 4), r(qn, 4);
        p.canonicalize();
        r.canonicalize();
        Rational lo = std::max(Rational(0), Rational(p + r - 1)), hi = std::min(p, r);
        Rational best = std::min(Rational((p - lo) + (r - lo)), Rational((p - hi) + (r - hi)));
        ok = ok && kantorovich(Measure(two, {p, 1 - p}), Measure(two, {r, 1 - r})).value == best;
      }
    out.require(ok, "2-point W vs extreme couplings");
  }
  {  // invariant measures and lambda via the fix-tower intersection
    VPolytope fix = enumerate_vertices(oracle::fix_tower_polytope(grid3));
    out.require(fix.vertices == std::vector<RationalVector>{lambda_measure(grid3).weights()} &&
                    lambda_measure(grid3).weights() == weights({"1/4", "1/2", "1/4"}),
                "grid(3) lambda vs fix-tower intersection");
    TheoremIsoCheck t = verify_theorem_iso(grid3, Measure(grid3, weights({"1/2", "0", "1/2"})), Measure::dirac(grid3, 1));
    out.require(t.holds && t.base_distance == parse("1/2") &&
                    oracle::kantorovich_by_potentials(grid3, weights({"1/2", "0", "1/2"}), weights({"0", "1", "0"})) ==
                        t.base_distance,
                "grid(3) invariant pair distance");
    bool quasi = true;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      FiniteMetricSpace x = random_space(2 + seed % 4, 8300 + seed, 2, 2);
      quasi = quasi && (enumerate_vertices(oracle::fix_tower_polytope(x)).size() == 1) == quotient_tower(x).quasi_nilpotent;
    }
    out.require(quasi, "fix tower collapses iff quasi-nilpotent");
  }
  {  // sampler steps from the naive F_n materialization
    std::vector<FiniteMetricSpace> spaces{grid3, grid5, equilateral_space(3)};
    for (std::uint64_t seed = 0; seed < 10; ++seed) spaces.push_back(random_space(2 + seed % 4, 8400 + seed, 2, 2));
    bool agree = true;
    for (const auto& x : spaces) {
      EmbeddingState s = initial_state(x);
      while (s.prefix_length() < x.size()) {
        oracle::NaiveStep naive = oracle::naive_extend(x, s.rho);
        ExtendResult r = extend(x, s);
        agree = agree && r.row == naive.row && r.state.tuples == naive.tuples;
        s = r.state;
      }
      agree = agree && canonical_metric(x).all_representations_count == oracle::brute_force_isometries(x).size();
    }
    CanonicalOrder g = canonical_metric(grid3);
    agree = agree && g.representation == PointTuple{0, 2, 1} &&
            canonical_orbit_sequence(grid3) == std::vector<std::size_t>{0, 0, 1};
    out.require(agree, "greedy extension vs naive construction");
  }
  {  // cli lambda example
    Report r = run("lambda", grid3);
    out.require(r.result["measure"] == nlohmann::json{"1/4", "1/2", "1/4"}, "run(lambda, grid(3))");
  }
}

void criterion9(Outcome& out) {
  RunOptions options;
  options.explore_sizes = {3, 4, 5};
  Report a = run("explore-interval", std::nullopt, options);
  Report b = run("explore-interval", std::nullopt, options);
  out.require(a.to_json().dump() == b.to_json().dump(), "reports differ between runs");
  for (const auto& row : a.result["grids"]) {
    std::string w = row["w_to_uniform"].get<std::string>();
    parse_rational(w);
    out.detail << " [n=" << row["n"].get<std::size_t>() << ": W=" << w << (row["exact"].get<bool>() ? "" : " inexact")
               << "]";
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "transitive spaces: central and lambda are uniform", 60, criterion1);
  all &= run_criterion(2, "grids: lambda is the cell-volume measure", 10, criterion2);
  all &= run_criterion(3, "quotient dual LP equals shortest-path metric", 300, criterion3);
  all &= run_criterion(4, "invariant measures keep W in the quotient", 600, criterion4);
  all &= run_criterion(5, "Kantorovich duality and metric axioms", 600, criterion5);
  all &= run_criterion(6, "exact central measures are isometry invariant", 600, criterion6);
  all &= run_criterion(7, "canonical metric invariance and counts", 600, criterion7);
  all &= run_criterion(8, "oracle agreement on derived examples", 600, criterion8);
  all &= run_criterion(9, "interval explorer is deterministic and exact", 600, criterion9);
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
