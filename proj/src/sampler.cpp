#include "mcenter/sampler.hpp"

#include "mcenter/isometry.hpp"

#include <algorithm>

namespace mcenter {

namespace {

void place(const FiniteMetricSpace& x, const RationalMatrix& rho, PointTuple& partial, std::vector<PointTuple>& out) {
  const std::size_t k = partial.size();
  if (k == rho.size()) {
    out.push_back(partial);
    return;
  }
  for (std::size_t p = 0; p < x.size(); ++p) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) ok = x.distance(partial[j], p) == rho[j][k];
    if (!ok) continue;
    partial.push_back(p);
    place(x, rho, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<PointTuple> embeddings(const FiniteMetricSpace& x, const RationalMatrix& rho_prefix) {
  std::vector<PointTuple> out;
  PointTuple partial;
  place(x, rho_prefix, partial, out);
  if (out.empty()) throw SamplerError("embeddings: prefix metric is not realizable in the space");
  return out;
}

EmbeddingState initial_state(const FiniteMetricSpace& x) {
  EmbeddingState state;
  state.rho = {{Rational(0)}};
  for (std::size_t p = 0; p < x.size(); ++p) state.tuples.push_back({p});
  return state;
}

ExtendResult extend(const FiniteMetricSpace& x, const EmbeddingState& state) {
  const std::size_t placed = state.prefix_length();
  if (placed >= x.size()) throw std::invalid_argument("extend: every point is already placed");
  if (state.tuples.empty()) throw SamplerError("extend: no embeddings of the current prefix");

  struct Candidate {
    std::size_t tuple;
    std::size_t point;
  };
  auto min_distance = [&](const PointTuple& t, std::size_t p) {
    Rational best = x.distance(t.front(), p);
    for (auto q : t)
      if (x.distance(q, p) < best) best = x.distance(q, p);
    return best;
  };

  Rational best = -1;
  std::vector<Candidate> survivors;
  for (std::size_t t = 0; t < state.tuples.size(); ++t)
    for (std::size_t p = 0; p < x.size(); ++p) {
      Rational f = min_distance(state.tuples[t], p);
      if (f > best) {
        best = f;
        survivors.clear();
      }
      if (f == best) survivors.push_back({t, p});
    }

  for (std::size_t j = 0; j < placed; ++j) {
    Rational top = -1;
    for (const auto& c : survivors) {
      const Rational& v = x.distance(state.tuples[c.tuple][j], c.point);
      if (v > top) top = v;
    }
    std::erase_if(survivors,
                  [&](const Candidate& c) { return x.distance(state.tuples[c.tuple][j], c.point) != top; });
  }

  ExtendResult result;
  result.max_min_distance = best;
  const Candidate& first = survivors.front();
  for (std::size_t j = 0; j < placed; ++j) result.row.push_back(x.distance(state.tuples[first.tuple][j], first.point));
  result.row.push_back(0);
  for (const auto& c : survivors)
    for (std::size_t j = 0; j < placed; ++j)
      if (x.distance(state.tuples[c.tuple][j], c.point) != result.row[j])
        throw SamplerError("extend: surviving tuples disagree on the new row");
  if (sgn(best) <= 0) throw SamplerError("extend: no unplaced point remains at positive distance");

  result.state.rho = state.rho;
  for (std::size_t j = 0; j < placed; ++j) result.state.rho[j].push_back(result.row[j]);
  result.state.rho.push_back(result.row);
  for (const auto& c : survivors) {
    PointTuple t = state.tuples[c.tuple];
    t.push_back(c.point);
    result.state.tuples.push_back(std::move(t));
  }
  std::sort(result.state.tuples.begin(), result.state.tuples.end());
  return result;
}

CanonicalOrder canonical_metric(const FiniteMetricSpace& x, const SamplerOptions& options) {
  if (x.size() > options.max_points)
    throw std::invalid_argument("canonical_metric: " + std::to_string(x.size()) + " points exceeds the limit of " +
                                std::to_string(options.max_points));
  EmbeddingState state = initial_state(x);
  while (state.prefix_length() < x.size()) state = extend(x, state).state;
  return CanonicalOrder{x, state.rho, state.tuples.front(), state.tuples.size()};
}

std::vector<PointTuple> representations(const FiniteMetricSpace& x, const CanonicalOrder& order) {
  return embeddings(x, order.rho);
}

std::vector<std::size_t> canonical_orbit_sequence(const FiniteMetricSpace& x, const SamplerOptions& options) {
  CanonicalOrder order = canonical_metric(x, options);
  OrbitPartition partition = orbits(enumerate_isometries(x));
  std::vector<std::size_t> sequence;
  for (auto p : order.representation) sequence.push_back(partition.orbit_of[p]);
  for (const auto& rep : representations(x, order))
    for (std::size_t k = 0; k < rep.size(); ++k)
      if (partition.orbit_of[rep[k]] != sequence[k])
        throw SamplerError("canonical_orbit_sequence: representations disagree at position " + std::to_string(k));
  return sequence;
}

}  // namespace mcenter
