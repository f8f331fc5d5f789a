#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vlcopt {

// Output of one CLI command. Only `header` and `rows` reach the CSV file, so
// the file is byte-stable for a given (config, command, flags, seed).
struct RunReport {
  std::string command;
  std::string digest;  // hash of the canonicalised config
  std::uint64_t seed = 0;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  double wall_seconds = 0.0;
};

// printf-style %.17g.
std::string format_number(double value);

// Header line plus one line per row, comma separated, LF terminated.
std::string to_csv(const RunReport& report);

// Throws IoError when the file cannot be written.
void write_csv(const RunReport& report, const std::string& path);

// FNV-1a 64 of the config re-serialised with sorted keys, as 16 hex digits.
// Throws ParseError on malformed JSON.
std::string scenario_digest(std::string_view config_text);

}  // namespace vlcopt
