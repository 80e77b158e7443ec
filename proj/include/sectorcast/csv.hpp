#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sectorcast {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

// Round to a fixed number of decimals (report-time presentation rounding).
double round_decimals(double v, int decimals);

// Parse a full field as a double; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view s);

std::string_view trim(std::string_view s);

// Split one CSV record on commas. No quoting support: every format this
// project reads and writes is quote-free by construction.
std::vector<std::string_view> split_csv_line(std::string_view line);

// Split text into lines, tolerating trailing \r and a missing final newline.
std::vector<std::string_view> split_lines(std::string_view text);

std::string lower(std::string_view s);

// Filesystem-safe slug: lowercase alphanumerics, everything else collapsed
// to single underscores.
std::string slugify(std::string_view name);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace sectorcast
