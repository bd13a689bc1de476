#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace dkg::cli {

std::size_t Table::column(const std::string& label) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == label) return i;
  throw std::out_of_range("no column '" + label + "' in table " + name);
}

double Table::number(std::size_t row, const std::string& label) const {
  const Cell& c = rows.at(row).at(column(label));
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return static_cast<double>(*i);
  throw std::invalid_argument("column '" + label + "' is not numeric");
}

std::string Table::text(std::size_t row, const std::string& label) const {
  return format_cell(rows.at(row).at(column(label)));
}

std::string format_cell(const Cell& c) {
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  const double v = std::get<double>(c);
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<Table>& tables, const std::string& timestamp) {
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << '\n';
    first = false;
    out << "# table: " << t.name << '\n';
    for (const auto& [k, v] : t.meta) out << "# " << k << ": " << v << '\n';
    if (!timestamp.empty()) out << "# generated: " << timestamp << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(format_cell(row[i]));
      out << '\n';
    }
  }
}

void write_json(std::ostream& out, const std::vector<Table>& tables, const std::string& timestamp) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["generated"] = timestamp;
  doc["tables"] = ordered_json::array();
  for (const auto& t : tables) {
    ordered_json jt;
    jt["name"] = t.name;
    jt["metadata"] = ordered_json::object();
    for (const auto& [k, v] : t.meta) jt["metadata"][k] = v;
    jt["columns"] = t.columns;
    jt["rows"] = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json jr = ordered_json::array();
      for (const auto& c : row) {
        if (const auto* i = std::get_if<long long>(&c))
          jr.push_back(*i);
        else if (const auto* s = std::get_if<std::string>(&c))
          jr.push_back(*s);
        else if (std::isfinite(std::get<double>(c)))
          jr.push_back(std::get<double>(c));
        else
          jr.push_back(format_cell(c));
      }
      jt["rows"].push_back(std::move(jr));
    }
    doc["tables"].push_back(std::move(jt));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace dkg::cli
