#include <algorithm>
#include <set>

#include "doctest.h"
#include "halin/error.hpp"
#include "halin/generator.hpp"
#include "halin/graph.hpp"
#include "halin/rng.hpp"
#include "test_graphs.hpp"

using namespace halin;

namespace {

Errc build_error(std::size_t n, std::vector<Edge> edges, std::vector<VertexId> cycle) {
  try {
    build_halin(n, edges, cycle);
  } catch (const HalinError& e) {
    return e.code();
  }
  FAIL("build_halin accepted the input");
  return Errc::InvalidArgument;
}

// Enumeration check: for every tree edge, the leaves on the far side of it
// must be a circular interval of cycle positions.
bool arcs_contiguous(std::size_t n_total, const std::vector<Edge>& edges,
                     const std::vector<VertexId>& cycle) {
  std::vector<std::vector<VertexId>> adj(n_total);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const std::size_t n = cycle.size();
  for (auto [u, v] : edges) {
    std::vector<char> side(n_total, 0);
    std::vector<VertexId> stack{v};
    side[v] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : adj[x]) {
        if (!side[y] && !(x == v && y == u)) {
          side[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::size_t boundaries = 0;
    for (std::size_t i = 0; i < n; ++i) boundaries += side[cycle[i]] != side[cycle[(i + 1) % n]];
    if (boundaries > 2) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("K4 is the smallest Halin graph") {
  const HalinGraph g = build_halin(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}},
                                   std::vector<VertexId>{1, 2, 3});
  CHECK(g.vertex_count() == 4);
  CHECK(g.leaf_count() == 3);
  CHECK(g.max_degree() == 3);
  CHECK(g.leaf_parent(1) == 0);
  CHECK(g.cycle_vertex(3) == 3);
  CHECK(g.lowest_internal_vertex() == 0);
}

TEST_CASE("build_halin rejects malformed characteristic trees") {
  // u(0) has leaves 2,3 and child v(1); v has a single leaf 4.
  CHECK(build_error(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}}, {2, 3, 4}) == Errc::DegreeTwoInternal);

  // r(0), u(1){l1=3,l2=4}, v(2){l3=5,l4=6}; cycle l1 l3 l2 l4.
  std::vector<Edge> crossing{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}};
  CHECK(build_error(7, crossing, {3, 5, 4, 6}) == Errc::ArcContiguityViolation);
  CHECK_FALSE(arcs_contiguous(7, crossing, {3, 5, 4, 6}));
  // Root 0 has tree-degree 2 in that tree; add a third child to isolate the
  // arc violation from the degree rule.
  crossing.emplace_back(0, 7);
  CHECK(build_error(8, crossing, {3, 5, 4, 6, 7}) == Errc::ArcContiguityViolation);
  CHECK_NOTHROW(build_halin(8, crossing, std::vector<VertexId>{3, 4, 5, 6, 7}));

  CHECK(build_error(4, {{0, 1}, {1, 2}, {2, 0}}, {1, 2, 3}) == Errc::NotATree);
  CHECK(build_error(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}, {1, 2, 3}) == Errc::NotATree);
  CHECK(build_error(4, {{0, 1}, {0, 2}}, {1, 2}) == Errc::NotATree);
  CHECK(build_error(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 2}) == Errc::CycleLeafMismatch);
  CHECK(build_error(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 2, 2}) == Errc::CycleLeafMismatch);
  CHECK(build_error(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 2, 3}) == Errc::CycleLeafMismatch);
  CHECK(build_error(2, {{0, 1}}, {0, 1}) == Errc::TooFewLeaves);
  CHECK(build_error(4, {{0, 1}, {0, 2}, {0, 9}}, {1, 2, 3}) == Errc::IndexOutOfRange);
  CHECK(build_error(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 2, 7}) == Errc::IndexOutOfRange);
}

TEST_CASE("arc check agrees with edge-by-edge enumeration on shuffled cycles") {
  SplitMix64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const HalinGraph g = gen_random_halin({3 + rng.uniform(0, 12), 5, rng.next()});
    std::vector<Edge> edges = g.tree_edges();
    std::vector<VertexId> cycle(g.cycle().begin(), g.cycle().end());
    if (rng.uniform(0, 2) != 0) {
      std::size_t i = rng.uniform(0, cycle.size() - 1), j = rng.uniform(0, cycle.size() - 1);
      std::swap(cycle[i], cycle[j]);
    }
    const bool expected = arcs_contiguous(g.vertex_count(), edges, cycle);
    bool accepted = true;
    try {
      build_halin(g.vertex_count(), edges, cycle);
    } catch (const HalinError& e) {
      CHECK(e.code() == Errc::ArcContiguityViolation);
      accepted = false;
    }
    CHECK(accepted == expected);
  }
}

TEST_CASE("distance") {
  const HalinGraph k4 = gen_wheel(3);
  for (VertexId u = 0; u < 4; ++u) {
    CHECK(distance(k4, u, u) == 0);
    for (VertexId v = 0; v < 4; ++v) {
      if (u != v) CHECK(distance(k4, u, v) == 1);
    }
  }
  const HalinGraph w5 = gen_wheel(5);
  CHECK(distance(w5, w5.cycle_vertex(1), w5.cycle_vertex(3)) == 2);
  CHECK_THROWS_AS(distance(w5, 0, 6), HalinError);
}

TEST_CASE("distance is a metric matching Floyd-Warshall") {
  SplitMix64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const HalinGraph g = gen_random_halin({3 + rng.uniform(0, 14), 5, rng.next()});
    REQUIRE(g.vertex_count() <= 30);
    auto fw = testing::floyd_warshall(g);
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        const auto d = distance(g, u, v);
        CHECK(d == fw[u][v]);
        CHECK(d == distance(g, v, u));
        CHECK((d == 0) == (u == v));
        for (VertexId w = 0; w < n; ++w) CHECK(fw[u][w] <= d + fw[v][w]);
      }
    }
  }
}

TEST_CASE("cycle index arithmetic wraps around") {
  const HalinGraph w5 = gen_wheel(5);
  CHECK(w5.cycle_successor(5) == 1);
  CHECK(w5.cycle_successor(2) == 3);
  CHECK(w5.cycle_predecessor(2) == 1);
  CHECK(w5.cycle_predecessor(w5.cycle_predecessor(2)) == 5);
  CHECK_THROWS_AS(w5.cycle_successor(0), HalinError);
  CHECK_THROWS_AS(w5.cycle_predecessor(6), HalinError);
  try {
    w5.cycle_successor(6);
  } catch (const HalinError& e) {
    CHECK(e.code() == Errc::IndexOutOfRange);
  }
}

TEST_CASE("cycle vertices have degree 3 and the maximum sits on an internal vertex") {
  SplitMix64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const HalinGraph g = gen_random_halin({3 + rng.uniform(0, 60), 3 + unsigned(rng.uniform(0, 2)), rng.next()});
    unsigned internal_max = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.is_leaf(v)) {
        CHECK(g.degree(v) == 3);
      } else {
        internal_max = std::max<unsigned>(internal_max, g.degree(v));
      }
    }
    CHECK(g.max_degree() == std::max(3u, internal_max));
  }
}

TEST_CASE("G neighbourhoods are the union of tree and cycle edges") {
  const HalinGraph w5 = gen_wheel(5);
  std::multiset<VertexId> nb;
  w5.for_each_neighbor(1, [&](VertexId u) { nb.insert(u); });
  CHECK(nb == std::multiset<VertexId>{0, 5, 2});
}
