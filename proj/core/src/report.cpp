#include "spanfact/report.hpp"

#include <ostream>
#include <sstream>

#include "spanfact/errors.hpp"

namespace spanfact {

using nlohmann::ordered_json;

std::string_view tool_version() { return SPANFACT_VERSION; }

void ReportTable::add(std::vector<nlohmann::json> row) {
  if (row.size() != columns.size())
    throw PreconditionError("report '" + schema + "': row has " + std::to_string(row.size()) +
                            " cells for " + std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

namespace {

std::string tsv_cell(const nlohmann::json &cell) {
  auto s = cell.is_string() ? cell.get<std::string>() : cell.dump();
  for (auto &c : s)
    if (c == '\t' || c == '\n')
      c = ' ';
  return s;
}

} // namespace

void emit_table(std::ostream &out, const ReportTable &table, OutputFormat format) {
  if (format == OutputFormat::Tsv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      out << (i ? "\t" : "") << table.columns[i];
    out << '\n';
    for (const auto &row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "\t" : "") << tsv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  for (const auto &row : table.rows) {
    ordered_json rec;
    rec["schema"] = table.schema;
    rec["version"] = tool_version();
    for (std::size_t i = 0; i < row.size(); ++i)
      rec[table.columns[i]] = row[i];
    out << rec.dump() << '\n';
  }
}

std::string emit_table(const ReportTable &table, OutputFormat format) {
  std::ostringstream out;
  emit_table(out, table, format);
  return out.str();
}

ReportTable parse_json_lines(std::string_view text) {
  ReportTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    ordered_json rec;
    try {
      rec = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error &e) {
      throw ParseError("line " + std::to_string(lineno), line, e.what());
    }
    if (!rec.is_object() || !rec.contains("schema"))
      throw ParseError("line " + std::to_string(lineno), line, "record without schema");
    std::vector<std::string> cols;
    std::vector<nlohmann::json> row;
    for (const auto &[key, value] : rec.items()) {
      if (key == "schema" || key == "version")
        continue;
      cols.push_back(key);
      row.push_back(value);
    }
    if (table.rows.empty()) {
      table.schema = rec["schema"].get<std::string>();
      table.columns = cols;
    } else if (cols != table.columns || rec["schema"] != table.schema) {
      throw ParseError("line " + std::to_string(lineno), line, "record shape changes");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

} // namespace spanfact
