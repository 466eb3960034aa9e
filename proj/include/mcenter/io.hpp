#ifndef MCENTER_IO_HPP
#define MCENTER_IO_HPP

#include "mcenter/metric.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace mcenter {

/// {"labels": [...], "matrix": [["0","1/2"], ...]}. Entries may be strings
/// ("3/4", "0.25", "2") or JSON integers; floats are rejected as inexact.
FiniteMetricSpace read_space_json(std::string_view text);

/// First row holds labels, every following row one matrix row.
FiniteMetricSpace read_space_csv(std::string_view text);

/// Dispatches on the extension (.json or .csv).
FiniteMetricSpace load_space(const std::string& path);

nlohmann::json space_to_json(const FiniteMetricSpace& space);
std::string space_to_csv(const FiniteMetricSpace& space);

nlohmann::json rationals_to_json(const RationalVector& values);
nlohmann::json rationals_to_json(const RationalMatrix& values);

/// Comma-separated rationals, e.g. "1/2,1/4,1/4".
RationalVector parse_rational_list(std::string_view text);

/// Hex SHA-256 of the canonical serialization (labels and p/q matrix).
std::string space_digest(const FiniteMetricSpace& space);
std::string sha256_hex(std::string_view data);

}  // namespace mcenter

#endif  // MCENTER_IO_HPP
