#include "mcenter/generators.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

namespace mcenter {

namespace {

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-')
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer, got \"" + text + "\"");
  return static_cast<std::size_t>(value);
}

void check_table(const CayleyTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    std::vector<bool> seen(n);
    for (auto v : row) {
      if (v >= n || seen[v]) throw std::invalid_argument("group table rows must be permutations of the elements");
      seen[v] = true;
    }
  }
}

std::size_t identity_element(const CayleyTable& table) {
  for (std::size_t e = 0; e < table.size(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < table.size() && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) return e;
  }
  throw std::invalid_argument("group table has no identity element");
}

}  // namespace

FiniteMetricSpace grid_space(std::size_t n) {
  if (n < 1) throw std::invalid_argument("grid needs n >= 1");
  RationalMatrix d(n, RationalVector(n));
  std::vector<std::string> labels;
  const Rational step = n == 1 ? Rational(0) : Rational(1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(to_string(Rational(step * i)));
    for (std::size_t j = 0; j < n; ++j) d[i][j] = step * (i > j ? i - j : j - i);
  }
  return FiniteMetricSpace::validate(std::move(d), std::move(labels));
}

FiniteMetricSpace cycle_space(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  RationalMatrix d(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t gap = i > j ? i - j : j - i;
      d[i][j] = Rational(std::min(gap, n - gap), n);
    }
  return FiniteMetricSpace::validate(std::move(d));
}

FiniteMetricSpace equilateral_space(std::size_t n, const Rational& side) {
  if (n < 1) throw std::invalid_argument("equilateral needs n >= 1");
  if (sgn(side) <= 0) throw std::invalid_argument("equilateral side must be positive");
  RationalMatrix d(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d[i][j] = side;
  return FiniteMetricSpace::validate(std::move(d));
}

FiniteMetricSpace random_space(std::size_t n, std::uint64_t seed, std::size_t dim, std::size_t side) {
  if (n < 1) throw std::invalid_argument("random needs n >= 1");
  if (dim < 1 || side < 1) throw std::invalid_argument("random needs dim >= 1 and side >= 1");
  double capacity = 1;
  for (std::size_t k = 0; k < dim; ++k) capacity *= static_cast<double>(side + 1);
  if (static_cast<double>(n) > capacity)
    throw std::invalid_argument("random: the cube holds fewer than n distinct points");

  std::mt19937_64 rng(seed);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> points;
  while (points.size() < n) {
    std::vector<std::size_t> p(dim);
    for (auto& c : p) c = static_cast<std::size_t>(rng() % (side + 1));
    if (seen.insert(p).second) points.push_back(std::move(p));
  }
  RationalMatrix d(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t l1 = 0;
      for (std::size_t k = 0; k < dim; ++k) l1 += points[i][k] > points[j][k] ? points[i][k] - points[j][k] : points[j][k] - points[i][k];
      d[i][j] = Rational(l1, side);
    }
  return FiniteMetricSpace::validate(std::move(d));
}

FiniteMetricSpace group_space(const CayleyTable& table, const std::vector<std::pair<std::size_t, Rational>>& generators,
                              std::vector<std::string> labels) {
  check_table(table);
  const std::size_t n = table.size();
  const std::size_t e = identity_element(table);

  std::vector<std::optional<Rational>> weight(n);
  for (const auto& [s, w] : generators) {
    if (s >= n) throw std::invalid_argument("generator " + std::to_string(s) + " is not a group element");
    if (s == e) throw std::invalid_argument("the identity cannot be a generator");
    if (sgn(w) <= 0) throw std::invalid_argument("generator weights must be positive");
    if (weight[s] && *weight[s] != w) throw std::invalid_argument("generator " + std::to_string(s) + " listed twice");
    weight[s] = w;
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (!weight[s]) continue;
    std::size_t inv = 0;
    while (table[s][inv] != e) ++inv;
    if (!weight[inv] || *weight[inv] != *weight[s])
      throw std::invalid_argument("generator weights must be symmetric: w(s) = w(s^-1)");
  }

  // Floyd-Warshall over the right Cayley graph g -> g·s.
  std::vector<std::vector<std::optional<Rational>>> d(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t g = 0; g < n; ++g) {
    d[g][g] = Rational(0);
    for (std::size_t s = 0; s < n; ++s) {
      if (!weight[s]) continue;
      auto& slot = d[g][table[g][s]];
      if (!slot || *weight[s] < *slot) slot = *weight[s];
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        Rational via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
      }
    }

  RationalMatrix dist(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!d[i][j]) throw std::invalid_argument("the generators do not generate the group");
      dist[i][j] = *d[i][j];
    }
  return FiniteMetricSpace::validate(std::move(dist), std::move(labels));
}

CayleyTable cyclic_group_table(std::size_t k) {
  if (k < 1) throw std::invalid_argument("cyclic group needs k >= 1");
  CayleyTable table(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a][b] = (a + b) % k;
  return table;
}

std::vector<Permutation> symmetric_group_elements(std::size_t m) {
  if (m < 1) throw std::invalid_argument("symmetric group needs m >= 1");
  std::vector<Permutation> elements;
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  do elements.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return elements;
}

CayleyTable symmetric_group_table(std::size_t m) {
  const auto elements = symmetric_group_elements(m);
  CayleyTable table(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      Permutation product(m);
      for (std::size_t i = 0; i < m; ++i) product[i] = elements[a][elements[b][i]];
      table[a][b] = static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), product) - elements.begin());
    }
  return table;
}

FiniteMetricSpace cyclic_group_space(std::size_t k) {
  if (k < 2) throw std::invalid_argument("cyclic group space needs k >= 2");
  std::vector<std::pair<std::size_t, Rational>> generators{{1, Rational(1)}};
  if (k - 1 != 1) generators.emplace_back(k - 1, Rational(1));
  return group_space(cyclic_group_table(k), generators);
}

FiniteMetricSpace symmetric_group_space(std::size_t m) {
  if (m < 2) throw std::invalid_argument("symmetric group space needs m >= 2");
  const auto elements = symmetric_group_elements(m);
  std::vector<std::pair<std::size_t, Rational>> generators;
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < elements.size(); ++g) {
    std::size_t moved = 0;
    std::string label;
    for (std::size_t i = 0; i < m; ++i) {
      moved += elements[g][i] != i;
      label += std::to_string(elements[g][i]);
    }
    if (moved == 2) generators.emplace_back(g, Rational(1));
    labels.push_back(std::move(label));
  }
  return group_space(symmetric_group_table(m), generators, std::move(labels));
}

namespace {

FiniteMetricSpace group_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  CayleyTable table = doc.at("table").get<CayleyTable>();
  std::vector<std::pair<std::size_t, Rational>> generators;
  for (const auto& g : doc.at("generators")) {
    const auto& w = g.at(1);
    generators.emplace_back(g.at(0).get<std::size_t>(),
                            parse_rational(w.is_string() ? w.get<std::string>() : w.dump()));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
  return group_space(table, generators, std::move(labels));
}

}  // namespace

FiniteMetricSpace generate(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      throw std::invalid_argument(kind + " takes " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                                  " parameter(s)");
  };
  if (kind == "grid") {
    need(1, 1);
    return grid_space(parse_count(params[0], "grid n"));
  }
  if (kind == "cycle") {
    need(1, 1);
    return cycle_space(parse_count(params[0], "cycle n"));
  }
  if (kind == "equilateral") {
    need(1, 2);
    return equilateral_space(parse_count(params[0], "equilateral n"),
                             params.size() > 1 ? parse_rational(params[1]) : Rational(1));
  }
  if (kind == "random") {
    need(1, 3);
    return random_space(parse_count(params[0], "random n"), seed,
                        params.size() > 1 ? parse_count(params[1], "random dim") : 2,
                        params.size() > 2 ? parse_count(params[2], "random side") : 4);
  }
  if (kind == "group") {
    need(1, 1);
    const std::string& spec = params[0];
    if (spec.rfind("cyclic:", 0) == 0) return cyclic_group_space(parse_count(spec.substr(7), "cyclic order"));
    if (spec.rfind("symmetric:", 0) == 0) return symmetric_group_space(parse_count(spec.substr(10), "symmetric degree"));
    return group_from_file(spec);
  }
  throw std::invalid_argument("unknown generator \"" + kind + "\" (grid, cycle, equilateral, random, group)");
}

}  // namespace mcenter
