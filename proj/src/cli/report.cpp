#include "csdlab/report.hpp"

#include <algorithm>
#include "json.hpp"

namespace csdlab::cli {
namespace {

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return "";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

const std::vector<std::string>& run_report_columns() {
  static const std::vector<std::string> columns = {
      "group", "order", "l1_size", "lattice_size", "csd",        "sd",
      "ndeg",  "cdeg",  "d",       "csd_star",     "is_iwasawa", "wall_time_ms",
  };
  return columns;
}

std::string render_degree(const Degree& d, const OutputOptions& options) {
  return options.decimal ? format_decimal(d.value(), 6) : d.to_string();
}

Table to_table(std::span<const RunReport> reports, const OutputOptions& options) {
  Table table{run_report_columns(), {}};
  auto deg = [&](const std::optional<Degree>& d) -> Cell {
    if (!d) return std::monostate{};
    return render_degree(*d, options);
  };
  for (const auto& r : reports) {
    table.rows.push_back({
        r.group,
        static_cast<std::int64_t>(r.order),
        static_cast<std::int64_t>(r.l1_size),
        r.lattice_size ? Cell(static_cast<std::int64_t>(*r.lattice_size)) : Cell(std::monostate{}),
        render_degree(r.csd, options),
        deg(r.sd),
        deg(r.ndeg),
        deg(r.cdeg),
        render_degree(r.d, options),
        deg(r.csd_star),
        r.is_iwasawa ? Cell(*r.is_iwasawa) : Cell(std::monostate{}),
        r.wall_time_ms ? Cell(*r.wall_time_ms) : Cell(std::monostate{}),
    });
  }
  return table;
}

std::string emit(const Table& table, Format format) {
  std::string out;
  switch (format) {
    case Format::csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + csv_field(table.columns[i]);
      }
      out += '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(cell_text(row[i]));
        out += '\n';
      }
      break;
    }
    case Format::json: {
      nlohmann::ordered_json array = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
          const Cell& c = row[i];
          auto& slot = obj[table.columns[i]];
          if (const auto* s = std::get_if<std::string>(&c)) {
            slot = *s;
          } else if (const auto* n = std::get_if<std::int64_t>(&c)) {
            slot = *n;
          } else if (const auto* b = std::get_if<bool>(&c)) {
            slot = *b;
          } else {
            slot = nullptr;
          }
        }
        array.push_back(std::move(obj));
      }
      out = array.dump(2) + "\n";
      break;
    }
    case Format::text: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
      std::vector<std::vector<std::string>> text_rows;
      for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < row.size(); ++i) {
          cells.push_back(std::holds_alternative<std::monostate>(row[i]) ? "-" : cell_text(row[i]));
          width[i] = std::max(width[i], cells.back().size());
        }
        text_rows.push_back(std::move(cells));
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          s += cells[i];
          if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out += s + '\n';
      };
      line(table.columns);
      for (const auto& r : text_rows) line(r);
      break;
    }
  }
  return out;
}

std::string emit(std::span<const RunReport> reports, const OutputOptions& options) {
  return emit(to_table(reports, options), options.format);
}

}  // namespace csdlab::cli
