#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fibalg/algebra.hpp"
#include "fibalg/golden.hpp"
#include "fibalg/lie.hpp"

namespace fibalg {

enum class OutputFormat { Text, Csv, Json };

/// "text", "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(std::string_view text);

/// A table cell is either a number (tables 1 and 2) or an algebra element.
using TableCell = std::variant<GoldenRational, AlgebraElement>;

struct Table {
    std::string id;
    std::string title;
    std::string corner;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<TableCell>> cells;
    /// How element cells name their generators, for parsing back.
    KeyKind key_kind = KeyKind::Index;
};

/// Canonical ids "1" … "7" and "jordan"; "8" and "7-jordan" are accepted for the last.
std::string canonical_table_id(std::string_view id);
std::vector<std::string> table_ids();

/// Recomputes a table from the modules.  central_sign only affects tables 6 and 7.
Table build_table(std::string_view id, CentralSign central_sign = CentralSign::Table);

std::string render_cell(const TableCell& cell, Notation notation);
std::string render(const Table& table, OutputFormat format);

/// Parses a CSV or JSON rendering back into cells, using `shape` for the key kind and numeric-vs-element layout.
std::vector<std::vector<TableCell>> parse_rendered_cells(std::string_view text, OutputFormat format, const Table& shape);

/// run_table(id, format): build_table followed by render.
std::string run_table(std::string_view id, OutputFormat format, CentralSign central_sign = CentralSign::Table);

}  // namespace fibalg
