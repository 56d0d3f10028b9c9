#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace hyshift {

using Cell = std::variant<std::int64_t, double, std::string>;

enum class ColumnType { Integer, Real, Text };

struct Column {
  std::string name;  // unit in brackets, e.g. "E_fine[Ry]"
  ColumnType type = ColumnType::Real;
  friend bool operator==(const Column&, const Column&) = default;
};

/// Row-major table with typed columns. Doubles are written with 17
/// significant digits so CSV and JSON output are lossless and bit-stable.
class Table {
public:
  Table() = default;
  explicit Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  /// Throws std::invalid_argument on arity or type mismatch.
  void add_row(std::vector<Cell> row);

  std::size_t column_index(const std::string& name) const;
  double real(std::size_t row, const std::string& column) const;
  std::int64_t integer(std::size_t row, const std::string& column) const;
  const std::string& text(std::size_t row, const std::string& column) const;

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
  std::string to_csv() const;
  std::string to_json() const;

  static Table from_json(const std::string& text);

  friend bool operator==(const Table&, const Table&) = default;

private:
  std::vector<Column> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// "%.17g"
std::string format_real(double v);

}  // namespace hyshift
