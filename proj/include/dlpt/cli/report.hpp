#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dlpt/errors.hpp"
#include "dlpt/verify.hpp"

namespace dlpt::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw InvalidArgument("row width does not match header");
    rows.push_back(std::move(row));
  }
  bool operator==(const Table&) const = default;
};

struct Report {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  Table rows;
  std::vector<verify::Check> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

/// 17 significant digits, '.' decimal point regardless of locale.
inline std::string format_real(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

inline std::string format_cell(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  return std::get<std::string>(c);
}

inline Table checks_table(const std::vector<verify::Check>& checks) {
  Table t{{"check", "measured", "limit", "bound", "passed", "detail"}, {}};
  for (const auto& c : checks) {
    t.add_row({c.name, c.measured, c.limit,
               std::string(c.bound == verify::Bound::at_most ? "at_most" : "at_least"),
               std::string(c.passed() ? "true" : "false"), c.detail});
  }
  return t;
}

inline void write_csv_table(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
}

/// Data rows when present, otherwise the checks.
inline void write_csv(std::ostream& os, const Report& r) {
  write_csv_table(os, r.rows.columns.empty() ? checks_table(r.checks) : r.rows);
}

inline nlohmann::ordered_json to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json out = ordered_json::object();
  out["config"] = r.config;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[r.rows.columns[i]] = v; }, row[i]);
    }
    rows.push_back(std::move(obj));
  }
  out["rows"] = std::move(rows);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check", c.name},
                      {"measured", c.measured},
                      {"limit", c.limit},
                      {"bound", c.bound == verify::Bound::at_most ? "at_most" : "at_least"},
                      {"passed", c.passed()},
                      {"detail", c.detail}});
  }
  out["checks"] = std::move(checks);
  return out;
}

inline void write_json(std::ostream& os, const Report& r) { os << to_json(r).dump(2) << '\n'; }

/// Rebuilds the data table from serialized JSON. Column order follows the
/// first row's key order.
inline Table rows_from_json(const nlohmann::ordered_json& doc) {
  Table t;
  const auto& rows = doc.at("rows");
  if (rows.empty()) return t;
  for (const auto& [key, value] : rows.front().items()) t.columns.push_back(key);
  for (const auto& obj : rows) {
    std::vector<Cell> row;
    for (const auto& col : t.columns) {
      const auto& v = obj.at(col);
      if (v.is_number_integer()) {
        row.emplace_back(v.get<std::int64_t>());
      } else if (v.is_number()) {
        row.emplace_back(v.get<double>());
      } else {
        row.emplace_back(v.get<std::string>());
      }
    }
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace dlpt::cli
