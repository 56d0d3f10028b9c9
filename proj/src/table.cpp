#include "hyshift/table.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hyshift {

namespace {

const char* type_name(ColumnType t) {
  switch (t) {
    case ColumnType::Integer: return "integer";
    case ColumnType::Real: return "real";
    case ColumnType::Text: return "text";
  }
  return "?";
}

ColumnType parse_type(const std::string& s) {
  if (s == "integer") return ColumnType::Integer;
  if (s == "real") return ColumnType::Real;
  if (s == "text") return ColumnType::Text;
  throw std::invalid_argument("table json: unknown column type '" + s + "'");
}

bool matches(const Cell& cell, ColumnType t) {
  switch (t) {
    case ColumnType::Integer: return std::holds_alternative<std::int64_t>(cell);
    case ColumnType::Real: return std::holds_alternative<double>(cell);
    case ColumnType::Text: return std::holds_alternative<std::string>(cell);
  }
  return false;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::invalid_argument("table: row arity mismatch");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!matches(row[i], columns_[i].type)) {
      throw std::invalid_argument("table: type mismatch in column " + columns_[i].name);
    }
  }
  rows_.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  throw std::out_of_range("table: no column " + name);
}

double Table::real(std::size_t row, const std::string& column) const {
  return std::get<double>(rows_.at(row).at(column_index(column)));
}

std::int64_t Table::integer(std::size_t row, const std::string& column) const {
  return std::get<std::int64_t>(rows_.at(row).at(column_index(column)));
}

const std::string& Table::text(std::size_t row, const std::string& column) const {
  return std::get<std::string>(rows_.at(row).at(column_index(column)));
}

void Table::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) os << ',';
    os << csv_quote(columns_[i].name);
  }
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) os << format_real(v);
            else if constexpr (std::is_same_v<T, std::string>) os << csv_quote(v);
            else os << v;
          },
          row[i]);
    }
    os << '\n';
  }
}

void Table::write_json(std::ostream& os) const {
  using nlohmann::json;
  os << "{\n  \"columns\": [";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) os << ", ";
    os << "{\"name\": " << json(columns_[i].name).dump() << ", \"type\": \""
       << type_name(columns_[i].type) << "\"}";
  }
  os << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    const auto& row = rows_[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ", ";
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (!std::isfinite(v)) throw std::domain_error("table json: non-finite value");
              os << format_real(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
              os << json(v).dump();
            } else {
              os << v;
            }
          },
          row[i]);
    }
    os << ']';
  }
  os << (rows_.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

std::string Table::to_csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

std::string Table::to_json() const {
  std::ostringstream os;
  write_json(os);
  return os.str();
}

Table Table::from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<Column> columns;
  for (const auto& c : doc.at("columns")) {
    columns.push_back({c.at("name").get<std::string>(), parse_type(c.at("type").get<std::string>())});
  }
  Table table(columns);
  for (const auto& jrow : doc.at("rows")) {
    if (jrow.size() != columns.size()) throw std::invalid_argument("table json: row arity mismatch");
    std::vector<Cell> row;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      switch (columns[i].type) {
        case ColumnType::Integer: row.emplace_back(jrow[i].get<std::int64_t>()); break;
        case ColumnType::Real: row.emplace_back(jrow[i].get<double>()); break;
        case ColumnType::Text: row.emplace_back(jrow[i].get<std::string>()); break;
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace hyshift
