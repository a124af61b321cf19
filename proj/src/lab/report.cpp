#include "bstopo/lab/report.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "bstopo/core/error.hpp"

namespace bstopo::lab {

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const auto& r = std::get<Rational>(cell);
  const auto exact = format_rational(r);
  if (exact.find('/') == std::string::npos) return exact;
  return format_double(to_double(r));
}

void ExperimentReport::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw ContractError("report " + name + ": row has " + std::to_string(row.size()) + " cells, expected " +
                        std::to_string(columns.size()));
  }
  for (const auto& c : row)
    if (const auto* d = std::get_if<double>(&c); d && !std::isfinite(*d))
      throw ContractError("report " + name + ": non-finite value");
  rows.push_back(std::move(row));
}

std::string ExperimentReport::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += columns[i];
  }
  out.push_back('\n');
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += format_cell(row[i]);
    }
    out.push_back('\n');
  }
  return out;
}

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = name;
  j["seed"] = seed;
  auto& p = j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  if (expected_limit) {
    j["expected_limit"] = format_cell(*expected_limit);
    j["expected_limit_source"] = expected_limit_source;
  }
  j["columns"] = columns;
  auto& rs = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      if (const auto* s = std::get_if<std::string>(&c)) {
        r[columns[i]] = *s;
      } else if (const auto* n = std::get_if<std::int64_t>(&c)) {
        r[columns[i]] = *n;
      } else {
        // Same digits as the CSV cell, emitted as a JSON number.
        r[columns[i]] = nlohmann::ordered_json::parse(format_cell(c));
      }
    }
    rs.push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

void write_report(const ExperimentReport& report, const std::filesystem::path& path) {
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw ParseError("cannot write " + path.string());
  csv << report.to_csv();
  std::filesystem::path json_path = path;
  json_path += ".json";
  std::ofstream json(json_path, std::ios::binary);
  if (!json) throw ParseError("cannot write " + json_path.string());
  json << report.to_json();
}

}  // namespace bstopo::lab
