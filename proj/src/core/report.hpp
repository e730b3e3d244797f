#pragma once

// Tabular reports with CSV, JSON and plain-text renderings.
//
// CSV: notes first as "# key: value" lines, then each table as a header row
// plus data rows; with several tables each is preceded by "# table: name" and
// separated by a blank line. Rationals print as "num/den" (integers as "num").
// JSON: rationals are [num, den] pairs. Text: rationals also show a decimal.

#include "core/types.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace radial {

using Cell = std::variant<std::monostate, bool, std::int64_t, Integer, Rational, std::string, nlohmann::json>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void note(std::string key, Cell value) { notes_.emplace_back(std::move(key), std::move(value)); }
  Table& add_table(std::string name, std::vector<std::string> columns);
  /// Records an assertion failure; the report no longer passes.
  void fail(std::string message) { failures_.push_back(std::move(message)); }

  const std::string& command() const { return command_; }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::pair<std::string, Cell>>& notes() const { return notes_; }
  const std::vector<Table>& tables() const { return tables_; }
  std::vector<Table>& tables() { return tables_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::string command_;
  std::vector<std::pair<std::string, Cell>> notes_;
  std::vector<Table> tables_;
  std::vector<std::string> failures_;
};

enum class Format { csv, json, text };

Format parse_format(std::string_view text);

std::string render(const Report& report, Format format);

/// "num/den", or "num" for integers.
std::string rational_string(const Rational& q);
/// Decimal rendering with 12 significant digits, derived from the exact value.
std::string decimal_string(const Rational& q);

}  // namespace radial
