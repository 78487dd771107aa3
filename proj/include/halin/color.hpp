#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

/// The five colors of a (1,1,2,2,2)-packing coloring.
enum class Color : std::uint8_t { C1, C1P, C2A, C2B, C2C };

inline constexpr Color kAllColors[] = {Color::C1, Color::C1P, Color::C2A, Color::C2B, Color::C2C};

/// Packing radius s: same-colored vertices must be at distance >= s + 1.
constexpr unsigned radius(Color c) noexcept {
  return c == Color::C1 || c == Color::C1P ? 1 : 2;
}

constexpr bool is_one_color(Color c) noexcept { return c == Color::C1 || c == Color::C1P; }

/// "1", "1'", "2a", "2b", "2c".
std::string_view display_name(Color c) noexcept;

/// File-format token: "1", "1p", "2a", "2b", "2c".
std::string_view token(Color c) noexcept;
std::optional<Color> color_from_token(std::string_view tok) noexcept;

/// The other color of {1, 1'}. Throws NotAOneColor for 2-colors.
Color complement_one(Color c);

/// Vertex -> color; entries are empty where a vertex is not (yet) colored.
struct Coloring {
  std::vector<std::optional<Color>> assignment;

  Coloring() = default;
  explicit Coloring(std::size_t n_total) : assignment(n_total) {}

  std::size_t size() const noexcept { return assignment.size(); }
  bool is_total() const noexcept;
  const std::optional<Color>& operator[](VertexId v) const { return assignment[v]; }
  std::optional<Color>& operator[](VertexId v) { return assignment[v]; }

  bool operator==(const Coloring&) const = default;
};

/// Coloring with opaque class labels, the shape the verifier consumes and the
/// coloring file holds. Empty entries are unassigned vertices.
using LabelColoring = std::vector<std::optional<std::string>>;

LabelColoring to_labels(const Coloring& coloring);

/// Coloring file:
///
///     COLORING 1
///     <vertex_id> <label>      (one line per vertex, ascending ids)
///
/// Labels are arbitrary tokens ("1", "1p", "2a", ... for algorithm output,
/// "c1".."ck" for oracle witnesses). Parsing rejects duplicate or
/// out-of-order ids; vertices never mentioned are left unassigned.
LabelColoring parse_coloring(std::string_view text, std::size_t n_total);
LabelColoring read_coloring(std::istream& in, std::size_t n_total);

/// Unassigned vertices are skipped.
std::string format_coloring(const LabelColoring& labels);
void write_coloring(std::ostream& out, const LabelColoring& labels);

}  // namespace halin
