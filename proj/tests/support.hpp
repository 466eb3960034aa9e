#ifndef MCENTER_TESTS_SUPPORT_HPP
#define MCENTER_TESTS_SUPPORT_HPP

#include "mcenter/generators.hpp"
#include "mcenter/metric.hpp"

#include <doctest.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace doctest {
template <>
struct StringMaker<mcenter::Rational> {
  static String convert(const mcenter::Rational& value) { return mcenter::to_string(value).c_str(); }
};
template <>
struct StringMaker<mcenter::RationalVector> {
  static String convert(const mcenter::RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + mcenter::to_string(v[i]);
    return (out + ")").c_str();
  }
};
}  // namespace doctest

namespace mcenter::test {

inline Rational q(const char* text) { return parse_rational(text); }

inline RationalVector vec(std::initializer_list<const char*> entries) {
  RationalVector out;
  for (auto e : entries) out.push_back(parse_rational(e));
  return out;
}

inline FiniteMetricSpace space(std::initializer_list<std::initializer_list<const char*>> rows) {
  RationalMatrix m;
  for (auto row : rows) m.push_back(vec(row));
  return FiniteMetricSpace::validate(std::move(m));
}

inline FiniteMetricSpace two_point() { return space({{"0", "1"}, {"1", "0"}}); }

// Path 0 - 1 - 2 with d(0,1) = d(1,2) = 1, d(0,2) = 2.
inline FiniteMetricSpace path3() { return space({{"0", "1", "2"}, {"1", "0", "1"}, {"2", "1", "0"}}); }

inline FiniteMetricSpace singleton() { return space({{"0"}}); }

// Random space whose pairwise distances are all distinct.
inline FiniteMetricSpace generic_space(std::size_t n, std::uint64_t seed) {
  for (;; ++seed) {
    FiniteMetricSpace x = random_space(n, seed, 3, 40);
    std::vector<Rational> seen;
    bool distinct = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        for (const auto& s : seen) distinct = distinct && s != x.distance(i, j);
        seen.push_back(x.distance(i, j));
      }
    if (distinct) return x;
  }
}

}  // namespace mcenter::test

#endif  // MCENTER_TESTS_SUPPORT_HPP
