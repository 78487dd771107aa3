#include "halin/color.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "text_lines.hpp"

namespace halin {

std::string_view display_name(Color c) noexcept {
  switch (c) {
    case Color::C1: return "1";
    case Color::C1P: return "1'";
    case Color::C2A: return "2a";
    case Color::C2B: return "2b";
    case Color::C2C: return "2c";
  }
  return "?";
}

std::string_view token(Color c) noexcept {
  return c == Color::C1P ? "1p" : display_name(c);
}

std::optional<Color> color_from_token(std::string_view tok) noexcept {
  for (Color c : kAllColors) {
    if (token(c) == tok) return c;
  }
  return std::nullopt;
}

Color complement_one(Color c) {
  switch (c) {
    case Color::C1: return Color::C1P;
    case Color::C1P: return Color::C1;
    default:
      throw HalinError(Errc::NotAOneColor, std::string(display_name(c)) + " is not 1 or 1'");
  }
}

bool Coloring::is_total() const noexcept {
  return std::all_of(assignment.begin(), assignment.end(),
                     [](const auto& c) { return c.has_value(); });
}

LabelColoring to_labels(const Coloring& coloring) {
  LabelColoring labels(coloring.size());
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    if (coloring.assignment[v]) labels[v] = std::string(token(*coloring.assignment[v]));
  }
  return labels;
}

LabelColoring parse_coloring(std::string_view text, std::size_t n_total) {
  using detail::parse_fail;
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw HalinError(Errc::ParseError, "empty input");
  const auto& header = lines[0];
  if (header.tokens[0] != "COLORING") parse_fail(header.number, "expected 'COLORING 1' header");
  detail::expect_arity(header, 2);
  if (header.tokens[1] != "1") parse_fail(header.number, "unsupported format version");

  LabelColoring labels(n_total);
  std::optional<std::uint64_t> previous;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 2) parse_fail(line.number, "expected '<vertex_id> <color>'");
    auto v = detail::parse_uint(line.tokens[0], line.number);
    if (v >= n_total) parse_fail(line.number, "vertex id " + std::to_string(v) + " out of range");
    if (previous && v <= *previous) parse_fail(line.number, "vertex ids must be strictly ascending");
    previous = v;
    labels[v] = std::string(line.tokens[1]);
  }
  return labels;
}

LabelColoring read_coloring(std::istream& in, std::size_t n_total) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_coloring(text, n_total);
}

void write_coloring(std::ostream& out, const LabelColoring& labels) {
  out << "COLORING 1\n";
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v]) out << v << ' ' << *labels[v] << '\n';
  }
}

std::string format_coloring(const LabelColoring& labels) {
  std::ostringstream out;
  write_coloring(out, labels);
  return out.str();
}

}  // namespace halin
