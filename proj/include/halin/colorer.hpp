#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halin/color.hpp"
#include "halin/graph.hpp"

namespace halin {

/// Proper 2-coloring of the characteristic tree with {1, 1'}: `root` gets 1,
/// every other vertex the opposite color of its BFS parent.
Coloring two_color_tree(const HalinGraph& g, VertexId root);

/// Working order of the cycle after the optional cyclic relabeling.
/// Working a_j is original a_{((j - 1 + offset) mod n) + 1}.
struct CycleView {
  std::size_t n = 0;
  std::size_t offset = 0;
  bool all_same = true;

  std::size_t original_index(std::size_t j) const noexcept { return (j - 1 + offset) % n + 1; }
  bool operator==(const CycleView&) const = default;
};

/// The rotation rule applied to the tree colors of a_1..a_n (original order).
/// If the end colors differ there is no rotation. If they agree and some
/// a_i differs from a_{i-1}, the first such a_i becomes working a_1.
/// Otherwise all colors agree and all_same stays true.
CycleView plan_rotation(std::span<const Color> cycle_tree_colors);

struct ConflictResolution {
  std::size_t i;          // working index whose N[b_i] held the conflict
  std::size_t j;          // the partner with the same color
  std::size_t recolored;  // i or j
};

/// What the pipeline did on one graph; rendered by format_trace.
struct PipelineTrace {
  VertexId root = kNoVertex;
  CycleView view;
  bool fixup1 = false;
  bool fixup2 = false;
  std::vector<ConflictResolution> resolutions;
};

std::vector<std::string> format_trace(const PipelineTrace& trace);

/// Dispatches to case1 (after rotation) or case2 depending on the tree colors
/// of the cycle. `tree_coloring` must be total.
std::pair<CycleView, Coloring> recoloring_dispatch(const HalinGraph& g,
                                                   const Coloring& tree_coloring,
                                                   PipelineTrace* trace = nullptr);

/// Cycle recoloring when the working ends have different tree colors.
Coloring case1(const HalinGraph& g, const CycleView& view, Coloring phi);

/// Cycle recoloring when every cycle vertex has the same tree color, with
/// both end-of-cycle fixups.
Coloring case2(const HalinGraph& g, const CycleView& view, Coloring phi,
               PipelineTrace* trace = nullptr);

/// For every internal b: working indices of cycle vertices with tree parent b
/// and a 2-color, ascending. Keys with no members are omitted.
class TwoNeighborhoods {
 public:
  static TwoNeighborhoods build(const HalinGraph& g, const CycleView& view, const Coloring& phi);

  std::span<const std::uint32_t> members(VertexId b) const {
    return {members_.data() + start_[b], members_.data() + start_[b + 1]};
  }
  std::size_t key_space() const noexcept { return start_.size() - 1; }

 private:
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> members_;
};

/// Resolves same-color 2a/2b pairs sharing a tree parent by recoloring one of
/// them 2c. Result is indexed by original vertex ids.
Coloring conflicts_resolving(const HalinGraph& g, const CycleView& view, Coloring phi,
                             PipelineTrace* trace = nullptr);

/// Runtime checks of the structural guarantees the coloring relies on.
struct LemmaReport {
  std::size_t largest_neighborhood = 0;     // max |N[b]| before conflict resolution
  bool neighborhood_bound = true;           // |N[b]| <= 3
  bool triples_have_adjacent_pair = true;   // |N[b]| = 3: two members consecutive on C
  bool triples_not_monochromatic = true;    // |N[b]| = 3: colors not all equal
  std::size_t triples_with_repeated_color = 0;  // |N[b]| = 3 with exactly two equal colors
  bool triples_distinct_after = true;       // after resolution: |N[b]| = 3 holds 3 colors
  bool no_double_2c = true;                 // after resolution: at most one 2c per N[b]

  bool holds() const noexcept {
    return neighborhood_bound && triples_have_adjacent_pair && triples_not_monochromatic &&
           triples_distinct_after && no_double_2c;
  }
};

void check_before_resolution(const HalinGraph& g, const CycleView& view, const Coloring& phi,
                             LemmaReport& report);
void check_after_resolution(const HalinGraph& g, const CycleView& view, const Coloring& phi,
                            LemmaReport& report);

enum class CaseKind { Case1, Case2 };

struct PipelineResult {
  Coloring coloring;        // final
  Coloring before_conflicts;
  CaseKind kind = CaseKind::Case1;
  PipelineTrace trace;
  LemmaReport lemmas;
};

/// Full pipeline with diagnostics. Throws MaxDegreeExceeded if Δ(g) > 5.
/// Does not throw on lemma failures; inspect `lemmas`.
PipelineResult packing_coloring_detailed(const HalinGraph& g);

/// The (1,1,2,2,2)-packing coloring of g, rooted at the lowest-id internal
/// vertex. Throws MaxDegreeExceeded if Δ(g) > 5 and InvariantViolated if a
/// structural check fails.
Coloring packing_coloring(const HalinGraph& g);

/// Colors of working a_1..a_n.
std::vector<Color> working_cycle_colors(const HalinGraph& g, const CycleView& view,
                                        const Coloring& phi);

/// The color-sequence shapes the recoloring stage can produce. Positions
/// marked i accept either 1 or 1'.
enum class TemplateMatch {
  NoMatch,
  Case1Mod0,        // i2a i2b ... i2a i2b
  Case1Mod1,        // ... i2a i2b i
  Case1Mod2,        // ... i2a i2b 2a i
  Case1Mod3,        // ... i2a i2b i2a i
  Case2Mod0,        // i2a i2b ... i2a i2b
  Case2Mod1,        // ... i2a i2b 2c
  Case2Mod1Fixup1,  // i2c i2b i2a i2b ... i2a i2c 2a
  Case2Mod1Fixup2,  // i2c i2b i2a i2b ... i2a i2b 2a
  Case2Mod2,        // ... i2a i2b i2c
  Case2Mod2Fixup2,  // i2c i2b i2a i2b ... i2a i2b i2a
  Case2Mod3,        // ... i2a i2b 2a i2b
};

std::string_view template_name(TemplateMatch m) noexcept;

TemplateMatch check_template(std::span<const Color> working_colors, CaseKind kind);

}  // namespace halin
