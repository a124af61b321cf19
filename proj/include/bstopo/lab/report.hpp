#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bstopo/core/rational.hpp"

namespace bstopo::lab {

using Cell = std::variant<std::int64_t, Rational, double, std::string>;

// Seeded table of observables. Rational cells are written as decimals
// (shortest round-trip form when the expansion does not terminate).
struct ExperimentReport {
  static constexpr int kSchemaVersion = 1;

  std::string name;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<Rational> expected_limit;
  std::string expected_limit_source;

  void add_param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
  // Throws ContractError if the row width differs from the column count or a
  // double cell is not finite.
  void add_row(std::vector<Cell> row);

  std::string to_csv() const;
  std::string to_json() const;
};

std::string format_cell(const Cell& cell);

// Writes CSV to `path` and the JSON mirror to `path` with ".json" appended.
// Throws ParseError if either file cannot be written.
void write_report(const ExperimentReport& report, const std::filesystem::path& path);

}  // namespace bstopo::lab
