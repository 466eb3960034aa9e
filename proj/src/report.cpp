#include "mcenter/report.hpp"

#include "mcenter/central.hpp"
#include "mcenter/generators.hpp"
#include "mcenter/io.hpp"
#include "mcenter/isometry.hpp"
#include "mcenter/quotient.hpp"
#include "mcenter/sampler.hpp"
#include "mcenter/transport.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace mcenter {

using nlohmann::json;

void Report::check(const std::string& name, bool holds) {
  (holds ? assertions_passed : assertions_failed).push_back(name);
}

json Report::to_json() const {
  json out{{"command", command},
           {"input_digest", input_digest},
           {"result", result},
           {"assertions_passed", assertions_passed},
           {"assertions_failed", assertions_failed}};
  if (seconds) out["seconds"] = *seconds;
  return out;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"validate", "iso",     "quotient", "tower",     "chebyshev",
                                              "kantorovich", "central", "lambda",   "canonical", "explore-interval"};
  return names;
}

RationalVector parse_measure(const std::string& text, const FiniteMetricSpace& space) {
  if (text == "uniform") return Measure::uniform(space).weights();
  if (text.rfind("dirac:", 0) == 0) {
    std::size_t point = std::stoul(text.substr(6));
    if (point >= space.size()) throw std::invalid_argument("dirac point out of range: " + text);
    return Measure::dirac(space, point).weights();
  }
  return parse_rational_list(text);
}

namespace {

json permutations_to_json(const std::vector<Permutation>& perms) {
  json out = json::array();
  for (const auto& p : perms) out.push_back(p);
  return out;
}

json level_to_json(const MeasureTowerLevel& level) {
  json vertices = json::array();
  for (const auto& v : level.vertices.vertices) vertices.push_back(rationals_to_json(v));
  return json{{"radius", to_string(level.radius)},
              {"w_diameter", to_string(level.w_diameter)},
              {"vertex_count", level.vertices.size()},
              {"vertices", vertices}};
}

void run_validate(const FiniteMetricSpace& x, Report& report) {
  WeakConvexityReport convexity = weak_convexity_check(x);
  json failures = json::array();
  for (auto [a, b] : convexity.failures) failures.push_back({a, b});
  report.result = {{"space", space_to_json(x)},
                   {"size", x.size()},
                   {"diameter", to_string(diameter(x))},
                   {"weakly_convex", convexity.convex},
                   {"weak_convexity_failures", failures}};
  report.check("metric axioms", true);
  if (convexity.convex && x.size() > 1) {
    ChebyshevCenter c = chebyshev_center_set(Subspace::whole(x));
    report.check("weakly convex: radius below diameter", c.radius < diameter(x));
  }
}

void run_iso(const FiniteMetricSpace& x, Report& report) {
  IsometryGroup group = enumerate_isometries(x);
  OrbitPartition partition = orbits(group);
  report.result = {{"order", group.order()},
                   {"elements", permutations_to_json(group.elements)},
                   {"orbits", partition.orbits},
                   {"transitive", is_transitive(group)}};

  std::set<Permutation> members(group.elements.begin(), group.elements.end());
  bool closed = true;
  for (const auto& g : group.elements) {
    closed = closed && members.count(inverse(g)) == 1;
    for (const auto& h : group.elements) closed = closed && members.count(compose(g, h)) == 1;
  }
  report.check("closed under composition and inverse", closed);
  bool orbit_stabilizer = true;
  for (const auto& orbit : partition.orbits)
    orbit_stabilizer = orbit_stabilizer && orbit.size() * stabilizer_order(group, orbit.front()) == group.order();
  report.check("orbit-stabilizer", orbit_stabilizer);
}

void run_quotient(const FiniteMetricSpace& x, Report& report) {
  QuotientSpace q = quotient(x);
  report.result = {{"space", space_to_json(q.space)}, {"projection", q.projection}, {"orbits", q.partition.orbits}};
  bool nonexpansive = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      nonexpansive = nonexpansive && q.space.distance(q.projection[i], q.projection[j]) <= x.distance(i, j);
  report.check("projection nonexpansive", nonexpansive);
  bool dual = true;
  for (std::size_t a = 0; a < q.space.size(); ++a)
    for (std::size_t b = a + 1; b < q.space.size(); ++b)
      dual = dual && quotient_dual_distance(q, a, b) == q.space.distance(a, b);
  report.check("dual LP matches shortest-path quotient metric", dual);
}

void run_tower(const FiniteMetricSpace& x, Report& report) {
  QuotientTower tower = quotient_tower(x);
  json levels = json::array();
  for (const auto& level : tower.levels) levels.push_back(space_to_json(level));
  json steps = json::array();
  for (const auto& step : tower.steps) steps.push_back(step.projection);
  json diameters = json::array();
  for (const auto& d : tower.diameters) diameters.push_back(to_string(d));
  report.result = {{"levels", levels},
                   {"projections", steps},
                   {"diameters", diameters},
                   {"quasi_nilpotent", tower.quasi_nilpotent},
                   {"terminal_size", tower.terminal().size()}};
  bool monotone = true;
  for (std::size_t k = 1; k < tower.diameters.size(); ++k)
    monotone = monotone && tower.diameters[k] <= tower.diameters[k - 1];
  report.check("diameters non-increasing", monotone);
  report.check("terminal level has a trivial isometry group", enumerate_isometries(tower.terminal()).trivial());
}

void run_chebyshev(const FiniteMetricSpace& x, Report& report) {
  ChebyshevTower tower = chebyshev_tower(x);
  json levels = json::array();
  for (const auto& level : tower.levels) levels.push_back(level.members());
  json radii = json::array();
  for (const auto& r : tower.radii) radii.push_back(to_string(r));
  report.result = {{"levels", levels},
                   {"radii", radii},
                   {"stabilized", tower.stabilized},
                   {"terminal", tower.terminal().labels()}};
  bool nested = true, monotone = true;
  for (std::size_t k = 1; k < tower.levels.size(); ++k) {
    for (auto m : tower.levels[k].members()) nested = nested && tower.levels[k - 1].contains(m);
    monotone = monotone && tower.radii[k] <= tower.radii[k - 1];
  }
  report.check("levels nested", nested);
  report.check("radii non-increasing", monotone);
}

void run_kantorovich(const FiniteMetricSpace& x, const RunOptions& options, Report& report) {
  if (!options.mu || !options.nu) throw std::invalid_argument("kantorovich needs --mu and --nu");
  Measure mu(x, parse_measure(*options.mu, x));
  Measure nu(x, parse_measure(*options.nu, x));
  KantorovichResult k = kantorovich(mu, nu);
  report.result = {{"mu", rationals_to_json(mu.weights())},
                   {"nu", rationals_to_json(nu.weights())},
                   {"value", to_string(k.value)},
                   {"plan", rationals_to_json(k.plan.matrix)},
                   {"potential", rationals_to_json(k.potential.values)}};
  Rational cost = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) cost += k.plan.matrix[i][j] * x.distance(i, j);
  Rational gain = dot(k.potential.values, mu.weights()) - dot(k.potential.values, nu.weights());
  report.check("plan is a coupling", is_coupling(k.plan, mu.weights(), nu.weights()));
  report.check("potential is 1-Lipschitz", is_lipschitz(x, k.potential.values));
  report.check("zero duality gap", cost == k.value && gain == k.value);
  report.check("value at most the diameter", k.value <= diameter(x));
}

CentralOptions central_options(const RunOptions& options) {
  CentralOptions c;
  c.max_iter = options.max_iter;
  return c;
}

json central_json(const CentralMeasureResult& c) {
  json levels = json::array();
  for (const auto& level : c.levels) levels.push_back(level_to_json(level));
  return json{{"measure", rationals_to_json(c.measure.weights())},
              {"exact", c.exact},
              {"residual_diameter", to_string(c.residual_diameter)},
              {"levels", levels}};
}

void check_tower(const CentralMeasureResult& c, Report& report) {
  bool monotone = true, bounded = true;
  for (std::size_t k = 1; k < c.levels.size(); ++k) {
    monotone = monotone && c.levels[k].radius <= c.levels[k - 1].radius;
    bounded = bounded && c.levels[k].w_diameter <= c.levels[k].radius;
  }
  report.check("radii non-increasing", monotone);
  report.check("face diameter at most the radius that cut it", bounded);
}

void run_central(const FiniteMetricSpace& x, const RunOptions& options, Report& report) {
  CentralMeasureResult c = central_measure(x, central_options(options));
  report.result = central_json(c);
  check_tower(c, report);
  if (c.exact) report.check("invariant under every isometry", is_invariant(c.measure, enumerate_isometries(x)));
}

void run_lambda(const FiniteMetricSpace& x, Report& report) {
  QuotientTower tower = quotient_tower(x);
  Measure lambda = lambda_measure(x, tower);
  report.result = {{"measure", rationals_to_json(lambda.weights())},
                   {"tower_height", tower.steps.size()},
                   {"quasi_nilpotent", tower.quasi_nilpotent}};
  report.check("invariant under every isometry", is_invariant(lambda, enumerate_isometries(x)));
}

void run_canonical(const FiniteMetricSpace& x, Report& report) {
  CanonicalOrder order = canonical_metric(x);
  IsometryGroup group = enumerate_isometries(x);
  report.result = {{"rho", rationals_to_json(order.rho)},
                   {"representation", order.representation},
                   {"representation_labels", [&] {
                      std::vector<std::string> labels;
                      for (auto p : order.representation) labels.push_back(x.labels()[p]);
                      return labels;
                    }()},
                   {"representation_count", order.all_representations_count}};
  report.check("representation count equals isometry group order", order.all_representations_count == group.order());
  bool agree = true;
  try {
    report.result["orbit_sequence"] = canonical_orbit_sequence(x);
  } catch (const SamplerError&) {
    agree = false;
  }
  report.check("representations agree on orbits", agree);
}

void run_explore(const RunOptions& options, Report& report) {
  CentralOptions c = central_options(options);
  json rows = json::array();
  for (auto n : options.explore_sizes) {
    if (n > c.max_points)
      throw std::invalid_argument("explore-interval: n = " + std::to_string(n) + " exceeds the central guard of " +
                                  std::to_string(c.max_points));
    FiniteMetricSpace grid = grid_space(n);
    CentralMeasureResult central = central_measure(grid, c);
    Rational w = kantorovich(central.measure, Measure::uniform(grid)).value;
    rows.push_back({{"n", n},
                    {"measure", rationals_to_json(central.measure.weights())},
                    {"exact", central.exact},
                    {"residual_diameter", to_string(central.residual_diameter)},
                    {"w_to_uniform", to_string(w)}});
  }
  report.result = {{"note", "evidence, not proof"}, {"grids", rows}};
}

}  // namespace

Report run(const std::string& command, const std::optional<FiniteMetricSpace>& space, const RunOptions& options) {
  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    throw std::invalid_argument("unknown command \"" + command + "\"");
  const auto start = std::chrono::steady_clock::now();

  Report report;
  report.command = command;
  if (command == "explore-interval") {
    std::string sizes;
    for (auto n : options.explore_sizes) sizes += std::to_string(n) + ",";
    report.input_digest = sha256_hex("explore-interval:" + sizes + std::to_string(options.max_iter));
    run_explore(options, report);
  } else {
    if (!space) throw std::invalid_argument(command + " needs a space (--space or --gen)");
    const FiniteMetricSpace& x = *space;
    report.input_digest = space_digest(x);
    if (command == "validate") run_validate(x, report);
    else if (command == "iso") run_iso(x, report);
    else if (command == "quotient") run_quotient(x, report);
    else if (command == "tower") run_tower(x, report);
    else if (command == "chebyshev") run_chebyshev(x, report);
    else if (command == "kantorovich") run_kantorovich(x, options, report);
    else if (command == "central") run_central(x, options, report);
    else if (command == "lambda") run_lambda(x, report);
    else if (command == "canonical") run_canonical(x, report);
  }

  if (options.timing)
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json error_payload(const std::string& command, const std::exception& error) {
  json detail{{"message", error.what()}};
  if (auto* e = dynamic_cast<const MetricError*>(&error)) {
    detail["type"] = "metric_error";
    detail["kind"] = to_string(e->kind());
    detail["witness"] = e->witness();
  } else if (auto* e = dynamic_cast<const NotQuasiNilpotentError*>(&error)) {
    detail["type"] = "not_quasi_nilpotent";
    detail["terminal_size"] = e->terminal().size();
  } else if (auto* e = dynamic_cast<const CapExceededError*>(&error)) {
    detail["type"] = "cap_exceeded";
    detail["count"] = e->count();
    detail["cap"] = e->cap();
  } else if (auto* e = dynamic_cast<const LpError*>(&error)) {
    detail["type"] = "lp_error";
    detail["status"] = to_string(e->status());
  } else if (dynamic_cast<const CentralError*>(&error)) {
    detail["type"] = "central_error";
  } else if (dynamic_cast<const TransportError*>(&error)) {
    detail["type"] = "transport_error";
  } else if (dynamic_cast<const SamplerError*>(&error) || dynamic_cast<const QuotientError*>(&error)) {
    detail["type"] = "internal_invariant";
  } else if (dynamic_cast<const nlohmann::json::exception*>(&error)) {
    detail["type"] = "parse_error";
  } else if (dynamic_cast<const std::invalid_argument*>(&error)) {
    detail["type"] = "invalid_argument";
  } else {
    detail["type"] = "error";
  }
  return json{{"command", command}, {"error", detail}};
}

}  // namespace mcenter
