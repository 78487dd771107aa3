#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

struct GeneratorConfig {
  std::size_t target_leaves = 16;
  unsigned max_degree = 5;
  std::uint64_t seed = 1;
};

/// Grows a random plane tree by expanding leaves into internal vertices with
/// 2-4 ordered children, then closes the leaves into a cycle in
/// left-to-right order. Ids are shuffled and the cycle is rotated/reflected,
/// all from the seed. The leaf count equals target_leaves.
/// Throws InfeasibleConfig if max_degree < 3 or target_leaves < 3.
HalinGraph gen_random_halin(const GeneratorConfig& cfg);

/// Wheel W_k: hub 0 and rim 1..k in cycle order. Throws TooFewLeaves if k < 3.
HalinGraph gen_wheel(std::size_t k);

/// Cubic Halin graph on an internal path of `internal_path` vertices (ids
/// 0..p-1); the end vertices carry two leaves each, inner ones one leaf.
/// Throws InfeasibleConfig if internal_path < 2.
HalinGraph gen_cubic_caterpillar(std::size_t internal_path);

enum class Family { Wheel, CubicCaterpillar, RandomSmallBatch };

struct FamilyParams {
  // wheel: k in [first, last]; cubic_caterpillar: internal path in [first, last];
  // random_small_batch: `count` graphs from `seed`.
  std::size_t first = 3;
  std::size_t last = 5;
  std::size_t count = 50;
  std::uint64_t seed = 1;
};

/// Throws UnknownFamily for unrecognised names.
Family parse_family(std::string_view name);

/// random_small_batch graphs all have at most 14 vertices.
std::vector<HalinGraph> gen_family(Family family, const FamilyParams& params);

}  // namespace halin
