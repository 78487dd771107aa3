#pragma once

// Tokenising helpers shared by the graph and coloring readers.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "halin/error.hpp"

namespace halin::detail {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Splits text into non-empty lines of whitespace-separated tokens with
// '#' comments stripped. Views point into `text`.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw HalinError(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    parse_fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

inline void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    parse_fail(line.number, "'" + std::string(line.tokens[0]) + "' expects " +
                                std::to_string(count - 1) + " argument(s), got " +
                                std::to_string(line.tokens.size() - 1));
  }
}

}  // namespace halin::detail
