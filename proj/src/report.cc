#include "vlcopt/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "vlcopt/errors.hpp"

namespace vlcopt {

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string to_csv(const RunReport& report) {
  std::string out;
  auto append_line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_line(report.header);
  for (const auto& row : report.rows) append_line(row);
  return out;
}

void write_csv(const RunReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + path);
  const std::string text = to_csv(report);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("cannot write output file: " + path);
}

std::string scenario_digest(std::string_view config_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(config_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  // nlohmann::json objects are std::map backed, so dump() is key-sorted.
  const std::string canonical = doc.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vlcopt
