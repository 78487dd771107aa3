#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "halin/color.hpp"
#include "halin/graph.hpp"
#include "halin/verifier.hpp"

namespace halin {

/// Dense n_total x n_total table of hop distances in G.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
  std::uint32_t& at(std::size_t u, std::size_t v) { return d_[u * n_ + v]; }
  std::uint32_t max_entry() const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

/// BFS from every vertex, parallel over sources.
DistanceMatrix all_pairs_distances(const HalinGraph& g);
/// Single-threaded reference for all_pairs_distances.
DistanceMatrix all_pairs_distances_serial(const HalinGraph& g);

struct OracleResult {
  bool feasible = false;
  /// Class index 1..k per vertex; present iff feasible.
  std::optional<std::vector<unsigned>> witness;
};

inline constexpr std::size_t kDefaultOracleLimit = 24;

/// Exact backtracking decision: does g admit an S-packing coloring?
/// Vertices are assigned in descending-degree order (ties by id); classes
/// with equal radii are treated as interchangeable. Throws TooLarge if
/// g.vertex_count() > max_vertices.
OracleResult s_packing_colorable(const HalinGraph& g, const PackingSequence& seq,
                                 std::size_t max_vertices = kDefaultOracleLimit);

/// Same search over an arbitrary connected graph given by its distance table.
OracleResult s_packing_colorable(const DistanceMatrix& d, const PackingSequence& seq,
                                 std::size_t max_vertices = kDefaultOracleLimit);

/// Witness as "c1".."ck" labels.
LabelColoring witness_labels(const std::vector<unsigned>& witness);

/// Witness with the algorithm's color names when `seq` is (1,1,2,2,2);
/// otherwise the c1..ck labels.
LabelColoring witness_named(const std::vector<unsigned>& witness, const PackingSequence& seq);

/// True iff packing_coloring(g) verifies and the oracle finds (1,1,2,2,2)
/// feasible. Propagates TooLarge.
bool cross_check(const HalinGraph& g, std::size_t max_vertices = kDefaultOracleLimit);

}  // namespace halin
