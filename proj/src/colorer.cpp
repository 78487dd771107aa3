#include "halin/colorer.hpp"

#include <algorithm>
#include <array>

#include "halin/error.hpp"

namespace halin {

namespace {

// Working-order accessors over the original cycle array.
class Working {
 public:
  Working(const HalinGraph& g, const CycleView& view) : g_(g), view_(view) {}

  std::size_t n() const noexcept { return view_.n; }
  VertexId a(std::size_t j) const { return g_.cycle()[view_.original_index(j) - 1]; }
  VertexId b(std::size_t j) const { return g_.leaf_parent(view_.original_index(j)); }

 private:
  const HalinGraph& g_;
  const CycleView& view_;
};

Color tree_color(const Coloring& phi, VertexId v) {
  // Every tree vertex is colored once two_color_tree has run.
  return *phi[v];
}

// 1_k: the color of {1, 1'} not used on b_k.
Color one_avoiding_parent(const Working& w, const Coloring& phi, std::size_t k) {
  return complement_one(tree_color(phi, w.b(k)));
}

// Shared head of CASE-1 and CASE-2: positions 1..m with m = 4*floor(n/4).
void color_periodic_head(const Working& w, Coloring& phi) {
  const std::size_t m = w.n() / 4 * 4;
  for (std::size_t k = 1; k <= m; ++k) {
    Color c;
    if (k % 2 == 1) {
      c = one_avoiding_parent(w, phi, k);
    } else if (k % 4 == 2) {
      c = Color::C2A;
    } else {
      c = Color::C2B;
    }
    phi[w.a(k)] = c;
  }
}

}  // namespace

Coloring two_color_tree(const HalinGraph& g, VertexId root) {
  if (root >= g.vertex_count()) {
    throw HalinError(Errc::IndexOutOfRange, "root " + std::to_string(root));
  }
  Coloring phi(g.vertex_count());
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  queue.push_back(root);
  phi[root] = Color::C1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    Color child = complement_one(*phi[v]);
    for (VertexId u : g.tree_neighbors(v)) {
      if (!phi[u]) {
        phi[u] = child;
        queue.push_back(u);
      }
    }
  }
  return phi;
}

CycleView plan_rotation(std::span<const Color> colors) {
  CycleView view;
  view.n = colors.size();
  if (colors.empty()) return view;
  if (colors.front() != colors.back()) {
    view.all_same = false;
    return view;
  }
  for (std::size_t i = 2; i <= view.n; ++i) {
    if (colors[i - 1] != colors[i - 2]) {
      view.offset = i - 1;
      view.all_same = false;
      break;
    }
  }
  return view;
}

std::vector<std::string> format_trace(const PipelineTrace& trace) {
  std::vector<std::string> lines;
  lines.push_back("tree root=" + std::to_string(trace.root));
  lines.push_back(std::string("recoloring all_same=") + (trace.view.all_same ? "true" : "false") +
                  " offset=" + std::to_string(trace.view.offset) +
                  " case=" + (trace.view.all_same ? "2" : "1"));
  if (trace.view.all_same) {
    lines.push_back(std::string("fixup1 ") + (trace.fixup1 ? "fired" : "skipped"));
    lines.push_back(std::string("fixup2 ") + (trace.fixup2 ? "fired" : "skipped"));
  }
  for (const auto& r : trace.resolutions) {
    lines.push_back("conflict i=" + std::to_string(r.i) + " j=" + std::to_string(r.j) +
                    " recolored=" + std::to_string(r.recolored));
  }
  lines.push_back("conflicts resolved=" + std::to_string(trace.resolutions.size()));
  return lines;
}

std::pair<CycleView, Coloring> recoloring_dispatch(const HalinGraph& g,
                                                   const Coloring& tree_coloring,
                                                   PipelineTrace* trace) {
  std::vector<Color> cycle_colors;
  cycle_colors.reserve(g.leaf_count());
  for (VertexId a : g.cycle()) cycle_colors.push_back(tree_color(tree_coloring, a));
  CycleView view = plan_rotation(cycle_colors);
  if (trace) trace->view = view;
  Coloring recolored = view.all_same ? case2(g, view, tree_coloring, trace)
                                     : case1(g, view, tree_coloring);
  return {view, std::move(recolored)};
}

Coloring case1(const HalinGraph& g, const CycleView& view, Coloring phi) {
  Working w(g, view);
  const std::size_t n = w.n();
  color_periodic_head(w, phi);
  switch (n % 4) {
    case 1:
      phi[w.a(n)] = one_avoiding_parent(w, phi, n);
      break;
    case 2:
      phi[w.a(n - 1)] = Color::C2A;
      phi[w.a(n)] = one_avoiding_parent(w, phi, n);
      break;
    case 3:
      phi[w.a(n - 2)] = one_avoiding_parent(w, phi, n - 2);
      phi[w.a(n - 1)] = Color::C2A;
      phi[w.a(n)] = one_avoiding_parent(w, phi, n);
      break;
    default:
      break;
  }
  return phi;
}

Coloring case2(const HalinGraph& g, const CycleView& view, Coloring phi, PipelineTrace* trace) {
  Working w(g, view);
  const std::size_t n = w.n();
  color_periodic_head(w, phi);
  switch (n % 4) {
    case 1:
      phi[w.a(n)] = Color::C2C;
      break;
    case 2:
      phi[w.a(n - 1)] = one_avoiding_parent(w, phi, n - 1);
      phi[w.a(n)] = Color::C2C;
      break;
    case 3:
      phi[w.a(n - 2)] = Color::C2A;
      phi[w.a(n - 1)] = one_avoiding_parent(w, phi, n - 1);
      phi[w.a(n)] = Color::C2B;
      break;
    default:
      break;
  }
  auto color = [&](std::size_t j) { return *phi[w.a(j)]; };

  // Fixup 1: a_{n-1}, a_n and an earlier 2b vertex all hang off b_n.
  const VertexId bn = w.b(n);
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    if (color(n) == Color::C2C && color(n - 1) == Color::C2B && color(i) == Color::C2B &&
        w.b(n - 1) == bn && w.b(i) == bn) {
      phi[w.a(2)] = Color::C2C;
      phi[w.a(n - 1)] = Color::C2C;
      phi[w.a(n)] = Color::C2A;
      if (trace) trace->fixup1 = true;
      break;
    }
  }

  // Fixup 2: a_n is the only 2-colored vertex under b_n, and b_2 also
  // carries a later 2a vertex.
  if (color(n) == Color::C2C) {
    bool not_separated = true;
    for (std::size_t i = 1; i < n; ++i) {
      if ((color(i) == Color::C2A || color(i) == Color::C2B) && w.b(i) == bn) {
        not_separated = false;
        break;
      }
    }
    if (not_separated) {
      const VertexId b2 = w.b(2);
      for (std::size_t i = 4; i < n; ++i) {
        if (color(i) == Color::C2A && w.b(i) == b2) {
          phi[w.a(2)] = Color::C2C;
          phi[w.a(n)] = Color::C2A;
          if (trace) trace->fixup2 = true;
          break;
        }
      }
    }
  }
  return phi;
}

TwoNeighborhoods TwoNeighborhoods::build(const HalinGraph& g, const CycleView& view,
                                         const Coloring& phi) {
  Working w(g, view);
  TwoNeighborhoods nb;
  nb.start_.assign(g.vertex_count() + 1, 0);
  auto is_member = [&](std::size_t j) { return !is_one_color(*phi[w.a(j)]); };
  for (std::size_t j = 1; j <= w.n(); ++j) {
    if (is_member(j)) ++nb.start_[w.b(j) + 1];
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) nb.start_[v + 1] += nb.start_[v];
  nb.members_.resize(nb.start_.back());
  std::vector<std::uint32_t> fill(nb.start_.begin(), nb.start_.end() - 1);
  for (std::size_t j = 1; j <= w.n(); ++j) {
    if (is_member(j)) nb.members_[fill[w.b(j)]++] = static_cast<std::uint32_t>(j);
  }
  return nb;
}

Coloring conflicts_resolving(const HalinGraph& g, const CycleView& view, Coloring phi,
                             PipelineTrace* trace) {
  Working w(g, view);
  const std::size_t n = w.n();
  const TwoNeighborhoods nb = TwoNeighborhoods::build(g, view, phi);
  auto color = [&](std::size_t j) { return *phi[w.a(j)]; };
  for (std::size_t i = 2; i <= n; i += 2) {
    const std::size_t two_back = i == 2 ? n : i - 2;  // a_0 is a_n
    for (std::uint32_t j : nb.members(w.b(i))) {
      if (j == i) continue;
      if (color(i) == color(j) && color(i) != Color::C2C) {
        const std::size_t target = color(two_back) != Color::C2C ? i : j;
        phi[w.a(target)] = Color::C2C;
        if (trace) trace->resolutions.push_back({i, j, target});
        break;
      }
    }
  }
  return phi;
}

void check_before_resolution(const HalinGraph& g, const CycleView& view, const Coloring& phi,
                             LemmaReport& report) {
  Working w(g, view);
  const std::size_t n = w.n();
  const TwoNeighborhoods nb = TwoNeighborhoods::build(g, view, phi);
  for (VertexId b = 0; b < nb.key_space(); ++b) {
    auto members = nb.members(b);
    report.largest_neighborhood = std::max(report.largest_neighborhood, members.size());
    if (members.size() > 3) report.neighborhood_bound = false;
    if (members.size() != 3) continue;
    auto consecutive = [n](std::size_t x, std::size_t y) {
      return y == x + 1 || (x == 1 && y == n) || (y == 1 && x == n);
    };
    if (!consecutive(members[0], members[1]) && !consecutive(members[1], members[2]) &&
        !consecutive(members[0], members[2])) {
      report.triples_have_adjacent_pair = false;
    }
    Color c0 = *phi[w.a(members[0])];
    Color c1 = *phi[w.a(members[1])];
    Color c2 = *phi[w.a(members[2])];
    if (c0 == c1 && c1 == c2) {
      report.triples_not_monochromatic = false;
    } else if (c0 == c1 || c1 == c2 || c0 == c2) {
      ++report.triples_with_repeated_color;
    }
  }
}

void check_after_resolution(const HalinGraph& g, const CycleView& view, const Coloring& phi,
                            LemmaReport& report) {
  Working w(g, view);
  const TwoNeighborhoods nb = TwoNeighborhoods::build(g, view, phi);
  for (VertexId b = 0; b < nb.key_space(); ++b) {
    auto members = nb.members(b);
    std::size_t count_2c = 0;
    for (std::uint32_t j : members) {
      if (*phi[w.a(j)] == Color::C2C) ++count_2c;
    }
    if (count_2c > 1) report.no_double_2c = false;
    if (members.size() == 3) {
      Color c0 = *phi[w.a(members[0])];
      Color c1 = *phi[w.a(members[1])];
      Color c2 = *phi[w.a(members[2])];
      if (c0 == c1 || c1 == c2 || c0 == c2) report.triples_distinct_after = false;
    }
  }
}

PipelineResult packing_coloring_detailed(const HalinGraph& g) {
  if (g.max_degree() > 5) {
    throw HalinError(Errc::MaxDegreeExceeded,
                     "maximum degree is " + std::to_string(g.max_degree()) + ", expected <= 5");
  }
  PipelineResult result;
  const VertexId root = g.lowest_internal_vertex();
  result.trace.root = root;
  Coloring tree = two_color_tree(g, root);
  auto [view, recolored] = recoloring_dispatch(g, tree, &result.trace);
  result.kind = view.all_same ? CaseKind::Case2 : CaseKind::Case1;
  check_before_resolution(g, view, recolored, result.lemmas);
  result.before_conflicts = recolored;
  result.coloring = conflicts_resolving(g, view, std::move(recolored), &result.trace);
  check_after_resolution(g, view, result.coloring, result.lemmas);
  return result;
}

Coloring packing_coloring(const HalinGraph& g) {
  PipelineResult result = packing_coloring_detailed(g);
  const LemmaReport& l = result.lemmas;
  if (!l.holds()) {
    std::string what;
    if (!l.neighborhood_bound) what += " |N[b]| > 3;";
    if (!l.triples_have_adjacent_pair) what += " 3-element N[b] without consecutive pair;";
    if (!l.triples_not_monochromatic) what += " monochromatic 3-element N[b];";
    if (!l.no_double_2c) what += " two 2c vertices in one N[b];";
    throw HalinError(Errc::InvariantViolated, "structural check failed:" + what);
  }
  return std::move(result.coloring);
}

std::vector<Color> working_cycle_colors(const HalinGraph& g, const CycleView& view,
                                        const Coloring& phi) {
  Working w(g, view);
  std::vector<Color> colors;
  colors.reserve(w.n());
  for (std::size_t j = 1; j <= w.n(); ++j) colors.push_back(*phi[w.a(j)]);
  return colors;
}

std::string_view template_name(TemplateMatch m) noexcept {
  switch (m) {
    case TemplateMatch::NoMatch: return "no match";
    case TemplateMatch::Case1Mod0: return "i2a i2b ... i2a i2b";
    case TemplateMatch::Case1Mod1: return "i2a i2b ... i2a i2b i";
    case TemplateMatch::Case1Mod2: return "i2a i2b ... i2a i2b 2a i";
    case TemplateMatch::Case1Mod3: return "i2a i2b ... i2a i2b i2a i";
    case TemplateMatch::Case2Mod0: return "i2a i2b ... i2a i2b";
    case TemplateMatch::Case2Mod1: return "i2a i2b ... i2a i2b 2c";
    case TemplateMatch::Case2Mod1Fixup1: return "i2c i2b i2a i2b ... i2a i2b i2a i2c 2a";
    case TemplateMatch::Case2Mod1Fixup2: return "i2c i2b i2a i2b ... i2a i2b 2a";
    case TemplateMatch::Case2Mod2: return "i2a i2b ... i2a i2b i2c";
    case TemplateMatch::Case2Mod2Fixup2: return "i2c i2b i2a i2b ... i2a i2b i2a";
    case TemplateMatch::Case2Mod3: return "i2a i2b ... i2a i2b 2a i2b";
  }
  return "?";
}

namespace {

enum class Slot : std::uint8_t { One, A, B, C };

struct Template {
  TemplateMatch name;
  std::vector<Slot> slots;
};

// "i2a i2b" repeated over `length` positions.
std::vector<Slot> periodic(std::size_t length) {
  std::vector<Slot> s(length);
  for (std::size_t k = 1; k <= length; ++k) {
    s[k - 1] = k % 2 == 1 ? Slot::One : (k % 4 == 2 ? Slot::A : Slot::B);
  }
  return s;
}

std::vector<Slot> with_tail(std::size_t n, std::initializer_list<Slot> tail) {
  std::vector<Slot> s = periodic(n - tail.size());
  s.insert(s.end(), tail);
  return s;
}

std::vector<Template> templates_for(std::size_t n, CaseKind kind) {
  using S = Slot;
  std::vector<Template> out;
  if (kind == CaseKind::Case1) {
    switch (n % 4) {
      case 0: out.push_back({TemplateMatch::Case1Mod0, periodic(n)}); break;
      case 1: out.push_back({TemplateMatch::Case1Mod1, with_tail(n, {S::One})}); break;
      case 2: out.push_back({TemplateMatch::Case1Mod2, with_tail(n, {S::A, S::One})}); break;
      case 3:
        out.push_back({TemplateMatch::Case1Mod3, with_tail(n, {S::One, S::A, S::One})});
        break;
    }
    return out;
  }
  switch (n % 4) {
    case 0: out.push_back({TemplateMatch::Case2Mod0, periodic(n)}); break;
    case 1: {
      out.push_back({TemplateMatch::Case2Mod1, with_tail(n, {S::C})});
      auto fix1 = with_tail(n, {S::C, S::A});
      fix1[1] = S::C;
      out.push_back({TemplateMatch::Case2Mod1Fixup1, fix1});
      auto fix2 = with_tail(n, {S::A});
      fix2[1] = S::C;
      out.push_back({TemplateMatch::Case2Mod1Fixup2, fix2});
      break;
    }
    case 2: {
      out.push_back({TemplateMatch::Case2Mod2, with_tail(n, {S::One, S::C})});
      auto fix2 = periodic(n - 1);
      fix2.push_back(S::A);
      fix2[1] = S::C;
      out.push_back({TemplateMatch::Case2Mod2Fixup2, fix2});
      break;
    }
    case 3:
      out.push_back({TemplateMatch::Case2Mod3, with_tail(n, {S::A, S::One, S::B})});
      break;
  }
  return out;
}

bool slot_accepts(Slot s, Color c) {
  switch (s) {
    case Slot::One: return is_one_color(c);
    case Slot::A: return c == Color::C2A;
    case Slot::B: return c == Color::C2B;
    case Slot::C: return c == Color::C2C;
  }
  return false;
}

}  // namespace

TemplateMatch check_template(std::span<const Color> working_colors, CaseKind kind) {
  const std::size_t n = working_colors.size();
  if (n == 0) return TemplateMatch::NoMatch;
  for (const auto& t : templates_for(n, kind)) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = slot_accepts(t.slots[k], working_colors[k]);
    if (ok) return t.name;
  }
  return TemplateMatch::NoMatch;
}

}  // namespace halin
