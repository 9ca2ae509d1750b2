#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "spanfact/config.hpp"

namespace spanfact {

std::string_view tool_version();

/// Rows of one record type. Cells are scalars, strings or arrays.
struct ReportTable {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  void add(std::vector<nlohmann::json> row);
  friend bool operator==(const ReportTable &, const ReportTable &) = default;
};

/**
 * TSV: a header row, then one line per row; strings are written raw and
 * other cells as compact JSON. JSON lines: one object per row carrying
 * "schema" and "version" ahead of the columns.
 */
std::string emit_table(const ReportTable &table, OutputFormat format);
void emit_table(std::ostream &out, const ReportTable &table, OutputFormat format);

/// Inverse of emit_table for json-lines output of a single table.
ReportTable parse_json_lines(std::string_view text);

} // namespace spanfact
