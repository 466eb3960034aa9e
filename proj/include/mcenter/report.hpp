#ifndef MCENTER_REPORT_HPP
#define MCENTER_REPORT_HPP

#include "mcenter/metric.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace mcenter {

struct RunOptions {
  std::size_t max_iter = 16;
  std::optional<std::string> mu;  // "1/2,1/2,0", "uniform" or "dirac:K"
  std::optional<std::string> nu;
  std::vector<std::size_t> explore_sizes{3, 4, 5};
  bool timing = false;
};

struct Report {
  std::string command;
  std::string input_digest;
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> assertions_passed;
  std::vector<std::string> assertions_failed;
  std::optional<double> seconds;

  bool ok() const { return assertions_failed.empty(); }
  void check(const std::string& name, bool holds);
  nlohmann::json to_json() const;
};

const std::vector<std::string>& commands();

/// Runs one command. Every command except explore-interval needs a space.
/// Module errors propagate as exceptions; see error_payload.
Report run(const std::string& command, const std::optional<FiniteMetricSpace>& space, const RunOptions& options = {});

/// {"command": ..., "error": {"type": ..., "message": ..., ...}}.
nlohmann::json error_payload(const std::string& command, const std::exception& error);

/// Parses a measure description against a space.
RationalVector parse_measure(const std::string& text, const FiniteMetricSpace& space);

}  // namespace mcenter

#endif  // MCENTER_REPORT_HPP
