#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace mcf::cli {

enum class ColumnType { Real, Integer, Text, Flag };

struct Column {
  std::string name;
  ColumnType type;
};

// monostate marks an empty cell (a value the row could not produce)
using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;
using Row = std::vector<Cell>;

struct Table {
  std::vector<Column> columns;
  std::vector<Row> rows;

  std::size_t column_index(std::string_view name) const;
  const Cell& at(std::size_t row, std::string_view name) const;
};

/// Bitwise equality for doubles, so NaN == NaN and -0 != +0.
bool cells_equal(const Cell& a, const Cell& b);
bool tables_equal(const Table& a, const Table& b);

/// Shortest exact text for a double at 17 significant digits, locale-free.
std::string format_real(double v);
double parse_real(std::string_view text);

std::string to_csv(const Table& table);
Table parse_csv(std::string_view text, const std::vector<Column>& schema);

nlohmann::json rows_to_json(const Table& table);
Table rows_from_json(const nlohmann::json& rows, const std::vector<Column>& schema);

/// Aligned plain-text table for terminals (12 significant digits).
void print_table(std::ostream& os, const Table& table);

}  // namespace mcf::cli
