#include "mcenter/lp.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>

namespace mcenter {

namespace {

// Inequalities of the polytope expressed in the equality chart: G y <= h.
struct ReducedSystem {
  AffineChart chart;
  RationalMatrix g;
  RationalVector h;
};

ReducedSystem reduce(const HPolytope& polytope) {
  auto chart = solve_equalities(polytope.dim, polytope.equalities);
  if (!chart) throw LpError(LpStatus::infeasible, "enumerate_vertices: equalities are inconsistent");
  ReducedSystem sys{*chart, {}, {}};
  const std::size_t k = sys.chart.reduced_dim();
  for (const auto& row : polytope.inequalities) {
    RationalVector g(k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      g[j] = dot(row.coeffs, sys.chart.directions[j]);
      nonzero = nonzero || sgn(g[j]) != 0;
    }
    Rational h = row.rhs - dot(row.coeffs, sys.chart.origin);
    if (!nonzero) {
      if (sgn(h) < 0) throw LpError(LpStatus::infeasible, "enumerate_vertices: polytope is empty");
      continue;
    }
    sys.g.push_back(std::move(g));
    sys.h.push_back(std::move(h));
  }
  return sys;
}

// Scales a vector to the primitive integer vector with the same direction.
void make_primitive(RationalVector& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class gcd_num = 0;
  for (auto& x : v) {
    if (sgn(x) == 0) continue;
    x *= lcm_den;
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.get_num_mpz_t());
  }
  if (gcd_num > 1)
    for (auto& x : v)
      if (sgn(x) != 0) x /= gcd_num;
}

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  Bitset operator&(const Bitset& other) const {
    Bitset out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }
  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RationalVector coords;  // (t, y)
  Bitset zeros;           // processed constraints vanishing on the ray
};

std::vector<RationalVector> to_vertices(const ReducedSystem& sys, const std::vector<RationalVector>& reduced_points) {
  std::vector<RationalVector> points;
  points.reserve(reduced_points.size());
  for (const auto& y : reduced_points) points.push_back(sys.chart.lift(y));
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

bool feasible(const ReducedSystem& sys, const RationalVector& y) {
  for (std::size_t r = 0; r < sys.g.size(); ++r)
    if (dot(sys.g[r], y) > sys.h[r]) return false;
  return true;
}

// Double description on the homogenized cone {(t,y) : h t - G y >= 0, t >= 0}.
std::vector<RationalVector> double_description(const ReducedSystem& sys, std::size_t max_rays) {
  const std::size_t k = sys.chart.reduced_dim();
  const std::size_t d = k + 1;

  RationalMatrix rows;
  rows.reserve(sys.g.size() + 1);
  {
    RationalVector t_row(d);
    t_row[0] = 1;
    rows.push_back(std::move(t_row));
  }
  for (std::size_t r = 0; r < sys.g.size(); ++r) {
    RationalVector row(d);
    row[0] = sys.h[r];
    for (std::size_t j = 0; j < k; ++j) row[j + 1] = -sys.g[r][j];
    make_primitive(row);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin() + 1, rows.end(), lex_less);
  rows.erase(std::unique(rows.begin() + 1, rows.end()), rows.end());
  const std::size_t total = rows.size();

  // Initial simplicial cone from d independent rows, greedily chosen.
  std::vector<std::size_t> basis;
  {
    RationalMatrix echelon;
    for (std::size_t r = 0; r < total && basis.size() < d; ++r) {
      RationalMatrix trial = echelon;
      trial.push_back(rows[r]);
      if (matrix_rank(trial) == trial.size()) {
        echelon = std::move(trial);
        basis.push_back(r);
      }
    }
  }
  if (basis.size() < d) {
    // A nonzero (t,y) annihilated by every row means a lineality direction
    // with t = 0, so the polytope is unbounded unless it is empty.
    HPolytope probe(k);
    for (std::size_t r = 0; r < sys.g.size(); ++r) probe.add_inequality(sys.g[r], sys.h[r]);
    LpResult lp = solve_lp(RationalVector(k), Sense::minimize, probe);
    if (!lp.optimal()) throw LpError(LpStatus::infeasible, "enumerate_vertices: polytope is empty");
    throw LpError(LpStatus::unbounded, "enumerate_vertices: polytope has a lineality direction");
  }

  std::vector<Ray> rays;
  std::vector<bool> processed(total, false);
  for (std::size_t col = 0; col < d; ++col) {
    RationalMatrix a;
    for (std::size_t r : basis) a.push_back(rows[r]);
    RationalVector e(d);
    e[col] = 1;
    auto x = solve_square(a, e);
    assert(x);
    Ray ray{std::move(*x), Bitset(total)};
    make_primitive(ray.coords);
    for (std::size_t i = 0; i < d; ++i)
      if (i != col) ray.zeros.set(basis[i]);
    rays.push_back(std::move(ray));
  }
  for (std::size_t r : basis) processed[r] = true;

  for (std::size_t c = 0; c < total; ++c) {
    if (processed[c]) continue;
    const RationalVector& row = rows[c];
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> positive, negative, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(row, rays[i].coords);
      int s = sgn(value[i]);
      (s > 0 ? positive : s < 0 ? negative : zero).push_back(i);
    }
    processed[c] = true;
    if (negative.empty()) {
      for (std::size_t i : zero) rays[i].zeros.set(c);
      continue;
    }

    std::vector<Ray> next;
    next.reserve(positive.size() + zero.size());
    for (std::size_t i : positive) next.push_back(rays[i]);
    for (std::size_t i : zero) {
      next.push_back(rays[i]);
      next.back().zeros.set(c);
    }
    for (std::size_t p : positive) {
      for (std::size_t q : negative) {
        Bitset common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t other = 0; other < rays.size() && adjacent; ++other) {
          if (other == p || other == q) continue;
          if (common.subset_of(rays[other].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray combined{RationalVector(d), common};
        for (std::size_t j = 0; j < d; ++j)
          combined.coords[j] = value[p] * rays[q].coords[j] - value[q] * rays[p].coords[j];
        make_primitive(combined.coords);
        combined.zeros.set(c);
        next.push_back(std::move(combined));
      }
    }
    rays = std::move(next);
    if (rays.size() > max_rays)
      throw CapExceededError(rays.size(), max_rays, "enumerate_vertices: double description ray count");
  }

  std::vector<RationalVector> reduced_points;
  bool recession = false;
  for (const auto& ray : rays) {
    int t = sgn(ray.coords[0]);
    if (t == 0) {
      recession = true;
      continue;
    }
    RationalVector y(k);
    for (std::size_t j = 0; j < k; ++j) y[j] = ray.coords[j + 1] / ray.coords[0];
    reduced_points.push_back(std::move(y));
  }
  if (reduced_points.empty()) throw LpError(LpStatus::infeasible, "enumerate_vertices: polytope is empty");
  if (recession) throw LpError(LpStatus::unbounded, "enumerate_vertices: polytope has a recession direction");
  return reduced_points;
}

std::vector<RationalVector> basis_enumeration(const ReducedSystem& sys, std::size_t max_bases) {
  const std::size_t k = sys.chart.reduced_dim();
  const std::size_t m = sys.g.size();

  // Boundedness: every coordinate must have a finite minimum and maximum.
  HPolytope probe(k);
  for (std::size_t r = 0; r < m; ++r) probe.add_inequality(sys.g[r], sys.h[r]);
  for (std::size_t j = 0; j < k; ++j) {
    RationalVector unit(k);
    unit[j] = 1;
    for (Sense sense : {Sense::minimize, Sense::maximize}) {
      LpResult lp = solve_lp(unit, sense, probe);
      if (lp.status == LpStatus::infeasible) throw LpError(LpStatus::infeasible, "enumerate_vertices: polytope is empty");
      if (lp.status == LpStatus::unbounded)
        throw LpError(LpStatus::unbounded, "enumerate_vertices: polytope has a recession direction");
    }
  }
  if (m < k) throw LpError(LpStatus::unbounded, "enumerate_vertices: too few constraints for a bounded polytope");

  // C(m, k) guard before touching any subset.
  {
    mpz_class subsets;
    mpz_bin_uiui(subsets.get_mpz_t(), m, k);
    if (subsets > max_bases)
      throw CapExceededError(subsets.fits_ulong_p() ? subsets.get_ui() : ~0UL, max_bases,
                             "enumerate_vertices: basis count");
  }

  std::vector<RationalVector> points;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    RationalMatrix a;
    RationalVector b;
    for (std::size_t r : pick) {
      a.push_back(sys.g[r]);
      b.push_back(sys.h[r]);
    }
    if (auto y = solve_square(a, b); y && feasible(sys, *y)) points.push_back(std::move(*y));

    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return points;
}

}  // namespace

VPolytope enumerate_vertices(const HPolytope& polytope, const VertexOptions& options) {
  ReducedSystem sys = reduce(polytope);
  VPolytope out;
  out.dim = polytope.dim;
  if (sys.chart.reduced_dim() == 0) {
    out.vertices.push_back(sys.chart.origin);
    return out;
  }
  std::vector<RationalVector> reduced = options.method == VertexMethod::double_description
                                            ? double_description(sys, options.max_vertices)
                                            : basis_enumeration(sys, options.max_bases);
  out.vertices = to_vertices(sys, reduced);
  return out;
}

HPolytope drop_slack_inequalities(const HPolytope& polytope, const VPolytope& vertices) {
  HPolytope out(polytope.dim);
  out.equalities = polytope.equalities;
  for (const auto& row : polytope.inequalities) {
    bool tight = std::any_of(vertices.vertices.begin(), vertices.vertices.end(),
                             [&](const RationalVector& v) { return dot(row.coeffs, v) == row.rhs; });
    if (tight) out.inequalities.push_back(row);
  }
  return out;
}

}  // namespace mcenter
