#ifndef TWEETSENSE_SERIALIZE_HPP_
#define TWEETSENSE_SERIALIZE_HPP_

#include <charconv>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "tweetsense/errors.hpp"

namespace tweetsense::detail {

// Shortest decimal form that parses back to the same double.
inline std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw FormatError("cannot format double");
  return std::string(buf, ptr);
}

inline double parse_double(std::string_view text, const std::string& what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw FormatError("bad number for " + what + ": '" + std::string(text) + "'");
  return value;
}

inline std::size_t parse_count(std::string_view text, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw FormatError("bad count for " + what + ": '" + std::string(text) + "'");
  return value;
}

// Reads one line, stripping a trailing '\r'; throws on EOF.
inline std::string read_line(std::istream& in, const std::string& what) {
  std::string line;
  if (!std::getline(in, line))
    throw FormatError("truncated file: expected " + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// First line of every persisted file names the format and version.
inline void expect_version_line(std::istream& in, std::string_view expected) {
  std::string line = read_line(in, "version line");
  if (line != expected)
    throw FormatError("incompatible file: expected version line '" +
                      std::string(expected) + "', got '" + line + "'");
}

// Splits on single spaces; empty fields are not produced. Returns owned
// strings so callers may split a temporary line safely.
inline std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    std::size_t j = line.find(' ', i);
    if (j == std::string_view::npos) j = line.size();
    if (j > i) fields.emplace_back(line.substr(i, j - i));
    i = j + 1;
  }
  return fields;
}

}  // namespace tweetsense::detail

#endif  // TWEETSENSE_SERIALIZE_HPP_
