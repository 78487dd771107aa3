#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "halin/graph.hpp"

namespace halin {

/// Parses the line-oriented graph format:
///
///     HALIN 1
///     VERTICES <N>
///     TREE <u> <v>          (N-1 lines, 0-based ids)
///     CYCLE <a_1> ... <a_n> (planar order)
///
/// '#' starts a comment; blank lines are ignored. Unknown keywords, duplicate
/// edges and trailing tokens are ParseErrors. Structural problems surface as
/// the corresponding build_halin error.
HalinGraph parse_graph(std::string_view text);
HalinGraph read_graph(std::istream& in);

/// Canonical serialisation: tree edges sorted with u < v.
std::string format_graph(const HalinGraph& g);
void write_graph(std::ostream& out, const HalinGraph& g);

}  // namespace halin
