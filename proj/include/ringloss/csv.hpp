#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ringloss/schema.hpp"

namespace ringloss {

// CSV dialect: UTF-8, comma separated, no quoting or escapes, "." decimal
// separator, first row is the header. A single trailing "\r" per line is
// tolerated. Empty cells mean MISSING.

// Raises SchemaError for header problems (missing, unknown or duplicate
// columns) and RowError for bad rows, tagged with the file line number.
Dataset parse_csv(std::istream& in, std::string source_name);

// Opens the file (IoError on failure) and parses it.
Dataset parse_csv_file(const std::filesystem::path& path);

// Shortest round-trip decimal form of a finite double, "." separator.
std::string format_double(double value);

std::string csv_header_line(bool with_target);
std::string csv_record_line(const RingRecord& record, bool with_target);

// Writes records in canonical column order. The target column is included
// exactly when the dataset carries one. Re-parsing the output yields an
// identical dataset, field for field.
void write_csv(const Dataset& ds, std::ostream& out);

// Atomic variant: writes to a sibling temp file, then renames into place.
void write_csv_file(const Dataset& ds, const std::filesystem::path& path);

}  // namespace ringloss
