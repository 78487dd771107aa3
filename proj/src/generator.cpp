#include "halin/generator.hpp"

#include <algorithm>
#include <string>

#include "halin/error.hpp"
#include "halin/rng.hpp"

namespace halin {

HalinGraph gen_random_halin(const GeneratorConfig& cfg) {
  if (cfg.max_degree < 3) {
    throw HalinError(Errc::InfeasibleConfig,
                     "max_degree must be at least 3, got " + std::to_string(cfg.max_degree));
  }
  if (cfg.target_leaves < 3) {
    throw HalinError(Errc::InfeasibleConfig,
                     "target_leaves must be at least 3, got " + std::to_string(cfg.target_leaves));
  }
  SplitMix64 rng(cfg.seed);

  // Plane tree with ordered children; vertex 0 is the root.
  std::vector<std::vector<VertexId>> children(1);
  std::vector<VertexId> leaves;
  auto add_children = [&](VertexId v, std::size_t count) {
    for (std::size_t c = 0; c < count; ++c) {
      auto id = static_cast<VertexId>(children.size());
      children.emplace_back();
      children[v].push_back(id);
      leaves.push_back(id);
    }
  };

  const std::size_t target = cfg.target_leaves;
  const std::size_t root_max = std::min<std::size_t>(cfg.max_degree, 5);
  add_children(0, std::min(rng.uniform(3, root_max), target));

  const std::size_t expand_max = std::min<std::size_t>(cfg.max_degree - 1, 4);
  while (leaves.size() < target) {
    std::size_t pick = rng.uniform(0, leaves.size() - 1);
    VertexId v = leaves[pick];
    leaves[pick] = leaves.back();
    leaves.pop_back();
    std::size_t count = rng.uniform(2, expand_max);
    count = std::min(count, target - leaves.size());
    add_children(v, count);
  }

  const std::size_t n_total = children.size();
  std::vector<VertexId> relabel(n_total);
  for (std::size_t i = 0; i < n_total; ++i) relabel[i] = static_cast<VertexId>(i);
  for (std::size_t i = n_total; i-- > 1;) std::swap(relabel[i], relabel[rng.uniform(0, i)]);

  std::vector<Edge> edges;
  edges.reserve(n_total - 1);
  std::vector<VertexId> cycle;
  cycle.reserve(target);
  std::vector<VertexId> stack{0};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (children[v].empty()) cycle.push_back(relabel[v]);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) {
      edges.emplace_back(relabel[v], relabel[*it]);
      stack.push_back(*it);
    }
  }

  std::rotate(cycle.begin(), cycle.begin() + rng.uniform(0, cycle.size() - 1), cycle.end());
  if (rng.uniform(0, 1) == 1) std::reverse(cycle.begin(), cycle.end());
  return build_halin(n_total, edges, cycle);
}

HalinGraph gen_wheel(std::size_t k) {
  if (k < 3) throw HalinError(Errc::TooFewLeaves, "wheel needs k >= 3, got " + std::to_string(k));
  std::vector<Edge> edges;
  std::vector<VertexId> cycle;
  for (std::size_t i = 1; i <= k; ++i) {
    edges.emplace_back(0, static_cast<VertexId>(i));
    cycle.push_back(static_cast<VertexId>(i));
  }
  return build_halin(k + 1, edges, cycle);
}

HalinGraph gen_cubic_caterpillar(std::size_t internal_path) {
  if (internal_path < 2) {
    throw HalinError(Errc::InfeasibleConfig, "cubic caterpillar needs an internal path of at least 2");
  }
  const std::size_t p = internal_path;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  }
  auto next = static_cast<VertexId>(p);
  auto leaf = [&](std::size_t owner) {
    edges.emplace_back(static_cast<VertexId>(owner), next);
    return next++;
  };
  // Path drawn left to right with the inner leaves above it. The cycle runs
  // lower-left, upper-left, inner leaves, upper-right, lower-right.
  VertexId first_low = leaf(0);
  VertexId first_high = leaf(0);
  std::vector<VertexId> cycle{first_low, first_high};
  for (std::size_t i = 1; i + 1 < p; ++i) cycle.push_back(leaf(i));
  VertexId last_high = leaf(p - 1);
  VertexId last_low = leaf(p - 1);
  cycle.push_back(last_high);
  cycle.push_back(last_low);
  return build_halin(next, edges, cycle);
}

Family parse_family(std::string_view name) {
  if (name == "wheel") return Family::Wheel;
  if (name == "cubic_caterpillar") return Family::CubicCaterpillar;
  if (name == "random_small_batch") return Family::RandomSmallBatch;
  throw HalinError(Errc::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

std::vector<HalinGraph> gen_family(Family family, const FamilyParams& params) {
  std::vector<HalinGraph> graphs;
  switch (family) {
    case Family::Wheel:
      for (std::size_t k = params.first; k <= params.last; ++k) graphs.push_back(gen_wheel(k));
      break;
    case Family::CubicCaterpillar:
      for (std::size_t p = params.first; p <= params.last; ++p) {
        graphs.push_back(gen_cubic_caterpillar(p));
      }
      break;
    case Family::RandomSmallBatch: {
      // At most 8 leaves keeps n_total <= 2*8 - 2 = 14.
      SplitMix64 seeds(params.seed);
      for (std::size_t i = 0; i < params.count; ++i) {
        GeneratorConfig cfg;
        cfg.seed = seeds.next();
        cfg.target_leaves = 3 + (cfg.seed >> 32) % 6;
        cfg.max_degree = 5;
        graphs.push_back(gen_random_halin(cfg));
      }
      break;
    }
  }
  return graphs;
}

}  // namespace halin
