#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace halin {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

/// Hop count in G = T ∪ C.
using GraphDistance = std::uint32_t;

/// A validated Halin graph: characteristic tree T plus the adjoint cycle C
/// through the leaves of T in planar order.
///
/// Cycle positions are 1-based (a_1..a_n); vertex ids are 0-based. The graph
/// is immutable after construction and safe for concurrent reads.
class HalinGraph {
 public:
  std::size_t vertex_count() const noexcept { return cycle_pos_.size(); }
  std::size_t leaf_count() const noexcept { return cycle_.size(); }
  unsigned max_degree() const noexcept { return max_degree_; }

  std::span<const VertexId> tree_neighbors(VertexId v) const {
    return {tree_nbr_.data() + tree_start_[v], tree_nbr_.data() + tree_start_[v + 1]};
  }
  std::size_t tree_degree(VertexId v) const { return tree_start_[v + 1] - tree_start_[v]; }
  bool is_leaf(VertexId v) const { return cycle_pos_[v] != 0; }

  /// Degree of v in G.
  std::size_t degree(VertexId v) const { return tree_degree(v) + (is_leaf(v) ? 2 : 0); }

  /// Cycle vertices a_1..a_n stored at indices 0..n-1.
  std::span<const VertexId> cycle() const noexcept { return cycle_; }

  /// a_i for 1 <= i <= n.
  VertexId cycle_vertex(std::size_t i) const;

  /// The 1-based cycle position of leaf v, or 0 for internal vertices.
  std::size_t cycle_position(VertexId v) const { return cycle_pos_[v]; }

  /// b_i: the unique tree neighbour of a_i.
  VertexId leaf_parent(std::size_t i) const;

  std::size_t cycle_successor(std::size_t i) const;
  std::size_t cycle_predecessor(std::size_t i) const;

  /// Visits every neighbour of v in G: tree neighbours first, then the two
  /// cycle neighbours when v is a leaf.
  template <typename F>
  void for_each_neighbor(VertexId v, F&& f) const {
    for (VertexId u : tree_neighbors(v)) f(u);
    if (std::size_t p = cycle_pos_[v]; p != 0) {
      const std::size_t n = cycle_.size();
      f(cycle_[p == 1 ? n - 1 : p - 2]);
      f(cycle_[p == n ? 0 : p]);
    }
  }

  /// Tree edges as (u, v) with u < v, sorted.
  std::vector<Edge> tree_edges() const;

  /// Lowest-id vertex of tree-degree at least 2.
  VertexId lowest_internal_vertex() const;

 private:
  friend HalinGraph build_halin(std::size_t, std::span<const Edge>, std::span<const VertexId>);

  // Tree adjacency in compressed rows: neighbours of v are
  // tree_nbr_[tree_start_[v] .. tree_start_[v + 1]).
  std::vector<std::uint32_t> tree_start_;
  std::vector<VertexId> tree_nbr_;
  std::vector<VertexId> cycle_;
  std::vector<VertexId> cycle_parent_;  // b_i at index i - 1
  std::vector<std::uint32_t> cycle_pos_;  // 0 for internal vertices
  unsigned max_degree_ = 0;
};

/// Validates and builds a Halin graph. Throws HalinError with one of
/// NotATree, DegreeTwoInternal, CycleLeafMismatch, ArcContiguityViolation,
/// TooFewLeaves, IndexOutOfRange or InvalidArgument.
HalinGraph build_halin(std::size_t n_total, std::span<const Edge> tree_edges,
                       std::span<const VertexId> cycle);

/// Breadth-first shortest path length in G.
GraphDistance distance(const HalinGraph& g, VertexId u, VertexId v);

}  // namespace halin
