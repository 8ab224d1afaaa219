#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "csdlab/degree.hpp"

namespace csdlab::cli {

enum class Format { text, csv, json };

struct OutputOptions {
  Format format = Format::text;
  bool decimal = false;  // render degrees as 6-significant-digit decimals
};

// One computed group. Optional fields are null when not requested.
struct RunReport {
  std::string group;
  std::size_t order = 0;
  std::size_t l1_size = 0;
  std::optional<std::size_t> lattice_size;
  Degree csd = Degree::one();
  std::optional<Degree> sd;
  std::optional<Degree> ndeg;
  std::optional<Degree> cdeg;
  Degree d = Degree::one();
  std::optional<Degree> csd_star;
  std::optional<bool> is_iwasawa;
  std::optional<std::int64_t> wall_time_ms;
};

// Column names of RunReport, in serialization order.
const std::vector<std::string>& run_report_columns();

using Cell = std::variant<std::monostate, std::string, std::int64_t, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render_degree(const Degree& d, const OutputOptions& options);

Table to_table(std::span<const RunReport> reports, const OutputOptions& options);

// text: space-aligned columns with a header line; csv: RFC 4180 quoting;
// json: array of objects keyed by column name, nulls for empty cells.
std::string emit(const Table& table, Format format);
std::string emit(std::span<const RunReport> reports, const OutputOptions& options);

}  // namespace csdlab::cli
