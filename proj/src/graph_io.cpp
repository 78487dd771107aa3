#include "halin/graph_io.hpp"

#include <algorithm>
#include <iterator>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "text_lines.hpp"

namespace halin {

using detail::expect_arity;
using detail::parse_fail;
using detail::parse_uint;

HalinGraph parse_graph(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw HalinError(Errc::ParseError, "empty input");

  const auto& header = lines[0];
  if (header.tokens[0] != "HALIN") parse_fail(header.number, "expected 'HALIN 1' header");
  expect_arity(header, 2);
  if (header.tokens[1] != "1") parse_fail(header.number, "unsupported format version");

  if (lines.size() < 2 || lines[1].tokens[0] != "VERTICES") {
    parse_fail(lines.size() < 2 ? header.number : lines[1].number, "expected 'VERTICES <N>'");
  }
  expect_arity(lines[1], 2);
  std::uint64_t n_total = parse_uint(lines[1].tokens[1], lines[1].number);
  if (n_total > 0xFFFFFFF0u) parse_fail(lines[1].number, "vertex count too large");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<VertexId> cycle;
  bool have_cycle = false;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const auto& line = lines[k];
    std::string_view keyword = line.tokens[0];
    if (have_cycle) parse_fail(line.number, "content after CYCLE line");
    if (keyword == "TREE") {
      expect_arity(line, 3);
      auto u = parse_uint(line.tokens[1], line.number);
      auto v = parse_uint(line.tokens[2], line.number);
      if (u >= n_total || v >= n_total) parse_fail(line.number, "vertex id out of range");
      Edge e{static_cast<VertexId>(u), static_cast<VertexId>(v)};
      if (!seen.insert(std::minmax(e.first, e.second)).second) {
        parse_fail(line.number, "duplicate tree edge");
      }
      edges.push_back(e);
    } else if (keyword == "CYCLE") {
      if (line.tokens.size() < 2) parse_fail(line.number, "empty CYCLE");
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        auto a = parse_uint(line.tokens[t], line.number);
        if (a >= n_total) parse_fail(line.number, "vertex id out of range");
        cycle.push_back(static_cast<VertexId>(a));
      }
      have_cycle = true;
    } else {
      parse_fail(line.number, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!have_cycle) throw HalinError(Errc::ParseError, "missing CYCLE line");
  return build_halin(n_total, edges, cycle);
}

HalinGraph read_graph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

void write_graph(std::ostream& out, const HalinGraph& g) {
  out << "HALIN 1\n";
  out << "VERTICES " << g.vertex_count() << '\n';
  for (auto [u, v] : g.tree_edges()) out << "TREE " << u << ' ' << v << '\n';
  out << "CYCLE";
  for (VertexId a : g.cycle()) out << ' ' << a;
  out << '\n';
}

std::string format_graph(const HalinGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace halin
