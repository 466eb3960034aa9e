#include "mcenter/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mcenter {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

Rational rational_from_json(const json& entry) {
  if (entry.is_string()) return parse_rational(entry.get<std::string>());
  if (entry.is_number_integer()) return parse_rational(entry.dump());
  throw std::invalid_argument("matrix entries must be rational strings or integers, got " + entry.dump());
}

}  // namespace

FiniteMetricSpace read_space_json(std::string_view text) {
  json doc = json::parse(text);
  if (!doc.is_object() || !doc.contains("matrix")) throw std::invalid_argument("space JSON needs a \"matrix\" field");
  RationalMatrix matrix;
  for (const auto& row : doc.at("matrix")) {
    if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
    RationalVector values;
    for (const auto& entry : row) values.push_back(rational_from_json(entry));
    matrix.push_back(std::move(values));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels"))
    for (const auto& label : doc.at("labels")) labels.push_back(label.is_string() ? label.get<std::string>() : label.dump());
  return FiniteMetricSpace::validate(std::move(matrix), std::move(labels));
}

FiniteMetricSpace read_space_csv(std::string_view text) {
  std::vector<std::string> labels;
  RationalMatrix matrix;
  bool header = true;
  for (auto line : split(text, '\n')) {
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (header) {
      for (auto cell : cells) labels.emplace_back(cell);
      header = false;
      continue;
    }
    RationalVector row;
    for (auto cell : cells) row.push_back(parse_rational(cell));
    matrix.push_back(std::move(row));
  }
  if (header) throw std::invalid_argument("space CSV is empty");
  return FiniteMetricSpace::validate(std::move(matrix), std::move(labels));
}

FiniteMetricSpace load_space(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) return read_space_json(buffer.str());
  if (ends_with(".csv")) return read_space_csv(buffer.str());
  throw std::invalid_argument("unknown space file format (expected .json or .csv): " + path);
}

json rationals_to_json(const RationalVector& values) { return to_strings(values); }

json rationals_to_json(const RationalMatrix& values) {
  json rows = json::array();
  for (const auto& row : values) rows.push_back(rationals_to_json(row));
  return rows;
}

json space_to_json(const FiniteMetricSpace& space) {
  return json{{"labels", space.labels()}, {"matrix", rationals_to_json(space.matrix())}};
}

std::string space_to_csv(const FiniteMetricSpace& space) {
  std::string out;
  auto append_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_row(space.labels());
  for (const auto& row : space.matrix()) append_row(to_strings(row));
  return out;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector values;
  for (auto cell : split(text, ',')) values.push_back(parse_rational(cell));
  return values;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string space_digest(const FiniteMetricSpace& space) { return sha256_hex(space_to_json(space).dump()); }

}  // namespace mcenter
