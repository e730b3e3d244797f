#include "core/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace radial {

namespace {

using OrderedJson = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

OrderedJson integer_json(const Integer& z) {
  if (z.fits_slong_p()) return OrderedJson(static_cast<std::int64_t>(z.get_si()));
  return OrderedJson(z.get_str());
}

std::string plain(const Cell& cell) {
  return std::visit(overloaded{
                        [](std::monostate) { return std::string(); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](std::int64_t i) { return std::to_string(i); },
                        [](const Integer& z) { return z.get_str(); },
                        [](const Rational& q) { return rational_string(q); },
                        [](const std::string& s) { return s; },
                        [](const nlohmann::json& j) { return j.dump(); },
                    },
                    cell);
}

std::string text_cell(const Cell& cell) {
  if (const auto* q = std::get_if<Rational>(&cell)) {
    if (q->get_den() == 1) return rational_string(*q);
    return rational_string(*q) + " (~" + decimal_string(*q) + ")";
  }
  return plain(cell);
}

OrderedJson json_cell(const Cell& cell) {
  return std::visit(overloaded{
                        [](std::monostate) { return OrderedJson(nullptr); },
                        [](bool b) { return OrderedJson(b); },
                        [](std::int64_t i) { return OrderedJson(i); },
                        [](const Integer& z) { return integer_json(z); },
                        [](const Rational& q) {
                          return OrderedJson::array({integer_json(q.get_num()), integer_json(q.get_den())});
                        },
                        [](const std::string& s) { return OrderedJson(s); },
                        [](const nlohmann::json& j) { return OrderedJson::parse(j.dump()); },
                    },
                    cell);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  os << "# command: " << r.command() << '\n';
  for (const auto& [key, value] : r.notes()) os << "# " << key << ": " << plain(value) << '\n';
  os << "# passed: " << (r.passed() ? "true" : "false") << '\n';
  for (const auto& f : r.failures()) os << "# failure: " << f << '\n';
  const bool several = r.tables().size() > 1;
  for (std::size_t t = 0; t < r.tables().size(); ++t) {
    const auto& table = r.tables()[t];
    if (several) {
      if (t > 0) os << '\n';
      os << "# table: " << table.name << '\n';
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << csv_escape(table.columns[c]);
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_escape(plain(row[c]));
      os << '\n';
    }
  }
  return os.str();
}

std::string render_json(const Report& r) {
  OrderedJson doc;
  doc["command"] = r.command();
  doc["passed"] = r.passed();
  doc["failures"] = r.failures();
  OrderedJson notes = OrderedJson::object();
  for (const auto& [key, value] : r.notes()) notes[key] = json_cell(value);
  doc["notes"] = notes;
  doc["tables"] = OrderedJson::array();
  for (const auto& table : r.tables()) {
    OrderedJson t;
    t["name"] = table.name;
    t["columns"] = table.columns;
    t["rows"] = OrderedJson::array();
    for (const auto& row : table.rows) {
      OrderedJson jr = OrderedJson::array();
      for (const auto& cell : row) jr.push_back(json_cell(cell));
      t["rows"].push_back(jr);
    }
    doc["tables"].push_back(t);
  }
  return doc.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command() << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  std::size_t width = 0;
  for (const auto& [key, value] : r.notes()) width = std::max(width, key.size());
  for (const auto& [key, value] : r.notes())
    os << "  " << key << std::string(width - key.size(), ' ') << " : " << text_cell(value) << '\n';
  for (const auto& f : r.failures()) os << "  FAILURE: " << f << '\n';
  for (const auto& table : r.tables()) {
    os << '\n' << table.name << '\n';
    std::vector<std::size_t> widths(table.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < table.columns.size(); ++c) widths[c] = table.columns[c].size();
    for (const auto& row : table.rows) {
      auto& line = cells.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(text_cell(row[c]));
        widths[c] = std::max(widths[c], line.back().size());
      }
    }
    auto emit = [&](const std::vector<std::string>& line) {
      std::string out = " ";
      for (std::size_t c = 0; c < line.size(); ++c) {
        out += ' ' + line[c];
        if (c + 1 < line.size()) out += std::string(widths[c] - line[c].size() + 1, ' ');
      }
      os << out << '\n';
    };
    emit(table.columns);
    for (const auto& line : cells) emit(line);
  }
  return os.str();
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::logic_error("table '" + name + "' row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

Table& Report::add_table(std::string name, std::vector<std::string> columns) {
  tables_.push_back(Table{std::move(name), std::move(columns), {}});
  return tables_.back();
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  if (text == "text") return Format::text;
  throw InputError("unknown output format '" + std::string(text) + "' (expected csv, json or text)");
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::csv:
      return render_csv(report);
    case Format::json:
      return render_json(report);
    case Format::text:
      return render_text(report);
  }
  return {};
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

}  // namespace radial
