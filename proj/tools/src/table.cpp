#include "mcf_cli/table.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace mcf::cli {

std::size_t Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].name == name) return i;
  throw std::out_of_range("no column named " + std::string(name));
}

const Cell& Table::at(std::size_t row, std::string_view name) const { return rows.at(row).at(column_index(name)); }

bool cells_equal(const Cell& a, const Cell& b) {
  if (a.index() != b.index()) return false;
  if (const double* x = std::get_if<double>(&a)) return std::bit_cast<std::uint64_t>(*x) == std::bit_cast<std::uint64_t>(std::get<double>(b));
  return a == b;
}

bool tables_equal(const Table& a, const Table& b) {
  if (a.columns.size() != b.columns.size() || a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.columns.size(); ++i)
    if (a.columns[i].name != b.columns[i].name || a.columns[i].type != b.columns[i].type) return false;
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    if (a.rows[r].size() != b.rows[r].size()) return false;
    for (std::size_t c = 0; c < a.rows[r].size(); ++c)
      if (!cells_equal(a.rows[r][c], b.rows[r][c])) return false;
  }
  return true;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

double parse_real(std::string_view text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("not a real number: '" + std::string(text) + "'");
  return v;
}

namespace {

std::int64_t parse_integer(std::string_view text) {
  std::int64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return v;
}

bool parse_flag(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw std::invalid_argument("not a flag: '" + std::string(text) + "'");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos && !s.empty()) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvField {
  std::string text;
  bool quoted = false;
};

std::vector<std::vector<CsvField>> split_csv(std::string_view text) {
  std::vector<std::vector<CsvField>> records;
  std::vector<CsvField> record;
  CsvField field;
  bool in_quotes = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.text += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.text += c;
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
      field.quoted = true;
      any = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field = {};
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.text.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
      }
      record = {};
      field = {};
      any = false;
    } else {
      field.text += c;
      any = true;
    }
  }
  if (in_quotes) throw std::invalid_argument("unterminated quoted CSV field");
  if (any || !field.text.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

Cell parse_cell(const CsvField& f, ColumnType type) {
  if (f.text.empty() && !f.quoted) return std::monostate{};
  switch (type) {
    case ColumnType::Real: return parse_real(f.text);
    case ColumnType::Integer: return parse_integer(f.text);
    case ColumnType::Flag: return parse_flag(f.text);
    case ColumnType::Text: return f.text;
  }
  return std::monostate{};
}

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, double>) return format_real(v);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else {
          // an empty string must stay distinguishable from an empty cell
          if (v.empty()) return "\"\"";
          return csv_escape(v);
        }
      },
      cell);
}

std::string table_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "-";
        else if constexpr (std::is_same_v<T, double>) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.12g", v);
          return buf;
        } else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "yes" : "no";
        else return v;
      },
      cell);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(table.columns[i].name);
  }
  out += '\n';
  for (const Row& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(std::string_view text, const std::vector<Column>& schema) {
  const auto records = split_csv(text);
  if (records.empty()) throw std::invalid_argument("CSV has no header row");
  const auto& header = records.front();
  if (header.size() != schema.size()) throw std::invalid_argument("CSV header does not match schema");
  for (std::size_t i = 0; i < schema.size(); ++i)
    if (header[i].text != schema[i].name)
      throw std::invalid_argument("CSV column " + std::to_string(i) + " is '" + header[i].text + "', expected '" +
                                  schema[i].name + "'");
  Table table{schema, {}};
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != schema.size())
      throw std::invalid_argument("CSV row " + std::to_string(r) + " has " + std::to_string(records[r].size()) +
                                  " fields");
    Row row;
    for (std::size_t c = 0; c < schema.size(); ++c) row.push_back(parse_cell(records[r][c], schema[c].type));
    table.rows.push_back(std::move(row));
  }
  return table;
}

nlohmann::json rows_to_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string& key = table.columns[c].name;
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) obj[key] = nullptr;
            else if constexpr (std::is_same_v<T, double>) {
              // JSON has no NaN or infinity literals
              if (std::isfinite(v)) obj[key] = v;
              else obj[key] = format_real(v);
            } else obj[key] = v;
          },
          row[c]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

Table rows_from_json(const nlohmann::json& rows, const std::vector<Column>& schema) {
  if (!rows.is_array()) throw std::invalid_argument("rows must be a JSON array");
  Table table{schema, {}};
  for (const auto& obj : rows) {
    Row row;
    for (const Column& col : schema) {
      const auto it = obj.find(col.name);
      if (it == obj.end()) throw std::invalid_argument("JSON row lacks column " + col.name);
      if (it->is_null()) {
        row.emplace_back(std::monostate{});
        continue;
      }
      switch (col.type) {
        case ColumnType::Real:
          row.emplace_back(it->is_string() ? parse_real(it->get<std::string>()) : it->get<double>());
          break;
        case ColumnType::Integer: row.emplace_back(it->get<std::int64_t>()); break;
        case ColumnType::Flag: row.emplace_back(it->get<bool>()); break;
        case ColumnType::Text: row.emplace_back(it->get<std::string>()); break;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void print_table(std::ostream& os, const Table& table) {
  std::vector<std::vector<std::string>> text;
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].name.size();
  for (const Row& row : table.rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(table_cell(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
    text.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c) os << "  ";
      os << fields[c];
      if (c + 1 < fields.size()) os << std::string(width[c] - fields[c].size(), ' ');
    }
    os << '\n';
  };
  std::vector<std::string> header;
  for (const Column& col : table.columns) header.push_back(col.name);
  emit(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : text) emit(line);
}

}  // namespace mcf::cli
