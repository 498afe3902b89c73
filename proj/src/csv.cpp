#include "ringloss/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "ringloss/io_util.hpp"

namespace ringloss {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  if (!cells.empty() && !cells.back().empty() && cells.back().back() == '\r')
    cells.back().pop_back();
  return cells;
}

double parse_real_cell(const std::string& cell, std::size_t line, std::string_view col) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value))
    throw RowError(line, "column " + std::string(col) + ": cannot parse \"" + cell +
                             "\" as a number");
  return value;
}

int parse_int_cell(const std::string& cell, std::size_t line, std::string_view col) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw RowError(line, "column " + std::string(col) + ": cannot parse \"" + cell +
                             "\" as an integer");
  return value;
}

bool parse_bool_cell(const std::string& cell, std::size_t line, std::string_view col) {
  if (cell == "0") return false;
  if (cell == "1") return true;
  throw RowError(line, "column " + std::string(col) + ": cannot parse \"" + cell +
                           "\" as a flag (expected 0 or 1)");
}

struct CellParser {
  RingRecord& record;
  const std::string& cell;
  std::size_t line;
  std::string_view col;

  void operator()(RealField f) { record.*f = parse_real_cell(cell, line, col); }
  void operator()(IntField f) { record.*f = parse_int_cell(cell, line, col); }
  void operator()(BoolField f) { record.*f = parse_bool_cell(cell, line, col); }
  void operator()(MetalField) {
    try {
      record.metal = parse_metal(cell);
    } catch (const ParseError& e) {
      throw RowError(line, "column metal: " + std::string(e.what()));
    }
  }
};

struct CellWriter {
  const RingRecord& record;
  std::string& out;

  void operator()(RealField f) {
    if (record.*f) out += format_double(*(record.*f));
  }
  void operator()(IntField f) {
    if (record.*f) out += std::to_string(*(record.*f));
  }
  void operator()(BoolField f) {
    if (record.*f) out += *(record.*f) ? '1' : '0';
  }
  void operator()(MetalField) { out += format_metal(record.metal); }
};

}  // namespace

Dataset parse_csv(std::istream& in, std::string source_name) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("empty input: no header row");
  const std::vector<std::string> header = split_line(line);

  const auto& defs = columns();
  // header position of each canonical column, npos when absent
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(defs.size(), npos);
  for (std::size_t h = 0; h < header.size(); ++h) {
    bool known = false;
    for (std::size_t c = 0; c < defs.size(); ++c) {
      if (header[h] == defs[c].name) {
        if (position[c] != npos)
          throw SchemaError("duplicate column \"" + header[h] + "\"");
        position[c] = h;
        known = true;
        break;
      }
    }
    if (!known) throw SchemaError("unknown column \"" + header[h] + "\"");
  }
  for (std::size_t c = 0; c < defs.size(); ++c)
    if (position[c] == npos && c != kTargetColumn)
      throw SchemaError("missing required column \"" + std::string(defs[c].name) + "\"");

  Dataset ds;
  ds.source_name = std::move(source_name);
  ds.has_target_column = position[kTargetColumn] != npos;

  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    // One trailing blank line (plain or CRLF) is a newline artifact, not a row.
    if ((line.empty() || line == "\r") &&
        in.peek() == std::char_traits<char>::eof())
      break;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size())
      throw RowError(line_no, "expected " + std::to_string(header.size()) +
                                  " cells, found " + std::to_string(cells.size()));
    RingRecord record;
    for (std::size_t c = 0; c < defs.size(); ++c) {
      if (position[c] == npos) continue;
      const std::string& cell = cells[position[c]];
      if (cell.empty()) {
        if (std::holds_alternative<MetalField>(defs[c].field))
          throw RowError(line_no, "column metal: must not be empty");
        continue;  // stays MISSING
      }
      std::visit(CellParser{record, cell, line_no, defs[c].name}, defs[c].field);
    }
    ds.records.push_back(record);
  }
  return ds;
}

Dataset parse_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_csv(in, path.filename().string());
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string csv_header_line(bool with_target) {
  const auto& defs = columns();
  std::string out;
  for (std::size_t c = 0; c < defs.size(); ++c) {
    if (c == kTargetColumn && !with_target) continue;
    if (!out.empty()) out += ',';
    out += defs[c].name;
  }
  return out;
}

std::string csv_record_line(const RingRecord& record, bool with_target) {
  const auto& defs = columns();
  std::string out;
  bool first = true;
  for (std::size_t c = 0; c < defs.size(); ++c) {
    if (c == kTargetColumn && !with_target) continue;
    if (!first) out += ',';
    first = false;
    std::visit(CellWriter{record, out}, defs[c].field);
  }
  return out;
}

void write_csv(const Dataset& ds, std::ostream& out) {
  out << csv_header_line(ds.has_target_column) << '\n';
  for (const RingRecord& r : ds.records)
    out << csv_record_line(r, ds.has_target_column) << '\n';
}

void write_csv_file(const Dataset& ds, const std::filesystem::path& path) {
  std::ostringstream buf;
  write_csv(ds, buf);
  atomic_write_text(path, std::move(buf).str());
}

}  // namespace ringloss
