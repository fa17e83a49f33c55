#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cadsel {

inline constexpr const char* kToolVersion = "cadsel 0.1.0";

// Shortest round-trip decimal form (std::to_chars). Used for every double
// that lands in a file so artifacts are byte-deterministic.
std::string format_double(double v);

// Inverse of format_double; throws std::invalid_argument on garbage.
double parse_double(const std::string& s, const std::string& what);

std::uint64_t parse_u64(const std::string& s, const std::string& what);

// FNV-1a over a string; hex-encoded. Good enough for config fingerprints.
std::string fnv1a_hex(const std::string& data);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Minimal CSV splitting; the formats here never quote or embed commas.
std::vector<std::string> split_csv_line(const std::string& line);
std::vector<std::string> split_lines(const std::string& text);

}  // namespace cadsel
