#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dkg::cli {

using Cell = std::variant<long long, double, std::string>;
using Row = std::vector<Cell>;

/// A result set: ordered metadata, named columns and rows.
struct Table {
  std::string name;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<Row> rows;

  std::size_t column(const std::string& label) const;  // throws std::out_of_range
  double number(std::size_t row, const std::string& label) const;
  std::string text(std::size_t row, const std::string& label) const;
};

/// %.12g, with integers printed without a decimal point.
std::string format_cell(const Cell& c);

/// '#'-prefixed "key: value" metadata lines, then the header and rows.
/// `timestamp` goes on its own last metadata line when non-empty.
void write_csv(std::ostream& out, const std::vector<Table>& tables, const std::string& timestamp);

/// {"tables": [{"name", "metadata", "columns", "rows"}], "generated": timestamp}
void write_json(std::ostream& out, const std::vector<Table>& tables, const std::string& timestamp);

}  // namespace dkg::cli
