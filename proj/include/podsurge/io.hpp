#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace podsurge::io {

/// Shortest round-trip decimal form ("%.17g", then trimmed) so that CSV
/// writers are bit-faithful and locale independent.
std::string format_double(double v);

double parse_double(const std::string& s);

/// Rows of cells; no quoting (cells never contain commas here).
using CsvTable = std::vector<std::vector<std::string>>;

void write_csv(const std::filesystem::path& path, const CsvTable& rows);
CsvTable read_csv(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// FNV-1a 64-bit content digest, hex encoded ("fnv1a:...."). Cheap and
/// adequate for detecting stale-artifact mixing.
std::string fnv1a_digest(const std::string& bytes);
std::string file_digest(const std::filesystem::path& path);

}  // namespace podsurge::io
