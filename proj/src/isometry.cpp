#include "mcenter/isometry.hpp"

#include <algorithm>
#include <numeric>

namespace mcenter {

bool is_isometry(const FiniteMetricSpace& space, const Permutation& perm) {
  const std::size_t n = space.size();
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (space.distance(perm[i], perm[j]) != space.distance(i, j)) return false;
  return true;
}

namespace {

class IsometrySearch {
 public:
  explicit IsometrySearch(const FiniteMetricSpace& space) : space_(space), n_(space.size()) {
    profiles_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      profiles_[i] = space.matrix()[i];
      std::sort(profiles_[i].begin(), profiles_[i].end());
    }
    image_.assign(n_, 0);
    used_.assign(n_, false);
  }

  std::vector<Permutation> run() {
    assign(0);
    return std::move(found_);
  }

 private:
  void assign(std::size_t i) {
    if (i == n_) {
      found_.push_back(image_);
      return;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (used_[j] || profiles_[j] != profiles_[i]) continue;
      bool consistent = true;
      for (std::size_t l = 0; l < i && consistent; ++l)
        consistent = space_.distance(j, image_[l]) == space_.distance(i, l);
      if (!consistent) continue;
      image_[i] = j;
      used_[j] = true;
      assign(i + 1);
      used_[j] = false;
    }
  }

  const FiniteMetricSpace& space_;
  std::size_t n_;
  RationalMatrix profiles_;
  Permutation image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

IsometryGroup enumerate_isometries(const FiniteMetricSpace& space) {
  IsometryGroup group{space, IsometrySearch(space).run()};
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation inverse(const Permutation& perm) {
  Permutation out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = i;
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

OrbitPartition orbits(const IsometryGroup& group) {
  const std::size_t n = group.space.size();
  OrbitPartition partition;
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  partition.orbit_of.assign(n, unassigned);
  for (std::size_t x = 0; x < n; ++x) {
    if (partition.orbit_of[x] != unassigned) continue;
    std::vector<std::size_t> orbit;
    for (const auto& g : group.elements) orbit.push_back(g[x]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (auto y : orbit) partition.orbit_of[y] = partition.orbits.size();
    partition.orbits.push_back(std::move(orbit));
  }
  return partition;
}

bool is_transitive(const IsometryGroup& group) { return orbits(group).count() == 1; }

std::size_t stabilizer_order(const IsometryGroup& group, std::size_t point) {
  return static_cast<std::size_t>(
      std::count_if(group.elements.begin(), group.elements.end(), [&](const Permutation& g) { return g[point] == point; }));
}

}  // namespace mcenter
