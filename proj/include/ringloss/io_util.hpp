#pragma once

#include <filesystem>
#include <string>

namespace ringloss {

// Reads a whole file; IoError if it cannot be opened or read.
std::string read_text_file(const std::filesystem::path& path);

// Writes content to a sibling ".tmp" file and renames it into place, so a
// crash never leaves a half-written file at `path`. IoError on failure.
void atomic_write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace ringloss
