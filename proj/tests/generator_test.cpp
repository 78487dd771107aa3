#include <set>

#include "doctest.h"
#include "halin/error.hpp"
#include "halin/generator.hpp"
#include "halin/graph_io.hpp"
#include "halin/rng.hpp"

using namespace halin;

TEST_CASE("SplitMix64 reference stream") {
  // First outputs for seed 0 of the published SplitMix64 reference.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);
}

TEST_CASE("three leaves always give K4") {
  for (std::uint64_t seed : {0ull, 1ull, 99ull, 123456789ull}) {
    const HalinGraph g = gen_random_halin({3, 5, seed});
    CHECK(g.vertex_count() == 4);
    CHECK(g.leaf_count() == 3);
    CHECK(g.max_degree() == 3);
  }
}

TEST_CASE("same config gives byte-identical output") {
  const GeneratorConfig cfg{100, 5, 42};
  CHECK(format_graph(gen_random_halin(cfg)) == format_graph(gen_random_halin(cfg)));
  CHECK(format_graph(gen_random_halin(cfg)) != format_graph(gen_random_halin({100, 5, 43})));
}

TEST_CASE("internal tree degrees stay in {3,4,5}") {
  const HalinGraph g = gen_random_halin({100, 5, 42});
  CHECK(g.leaf_count() == 100);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_leaf(v)) {
      CHECK(g.tree_degree(v) >= 3);
      CHECK(g.tree_degree(v) <= 5);
    }
  }
}

TEST_CASE("1000 random seeds: valid graphs within the degree cap") {
  SplitMix64 rng(1000);
  for (int t = 0; t < 1000; ++t) {
    GeneratorConfig cfg;
    cfg.seed = rng.next();
    cfg.max_degree = 3 + static_cast<unsigned>(rng.uniform(0, 3));
    cfg.target_leaves = 3 + rng.uniform(0, 150);
    const HalinGraph g = gen_random_halin(cfg);  // throws if build_halin rejects
    CHECK(g.max_degree() <= std::max(3u, cfg.max_degree));
    CHECK(g.leaf_count() + 2 >= cfg.target_leaves);
    CHECK(g.leaf_count() <= cfg.target_leaves + 2);
  }
}

TEST_CASE("generator rejects infeasible configs") {
  try {
    gen_random_halin({10, 2, 1});
    FAIL("expected InfeasibleConfig");
  } catch (const HalinError& e) {
    CHECK(e.code() == Errc::InfeasibleConfig);
  }
  CHECK_THROWS_AS(gen_random_halin({2, 5, 1}), HalinError);
}

TEST_CASE("wheels") {
  const HalinGraph k4 = gen_wheel(3);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.max_degree() == 3);

  const HalinGraph w5 = gen_wheel(5);
  CHECK(w5.vertex_count() == 6);
  CHECK(w5.degree(0) == 5);
  for (std::size_t i = 1; i <= 5; ++i) CHECK(w5.degree(w5.cycle_vertex(i)) == 3);
  CHECK(w5.max_degree() == 5);

  try {
    gen_wheel(2);
    FAIL("expected TooFewLeaves");
  } catch (const HalinError& e) {
    CHECK(e.code() == Errc::TooFewLeaves);
  }
}

TEST_CASE("cubic caterpillar on an internal path of 3") {
  const HalinGraph g = gen_cubic_caterpillar(3);
  CHECK(g.vertex_count() == 8);
  CHECK(g.leaf_count() == 5);
  CHECK(g.max_degree() == 3);
  for (VertexId v = 0; v < 3; ++v) CHECK(g.tree_degree(v) == 3);
  CHECK_THROWS_AS(gen_cubic_caterpillar(1), HalinError);
}

TEST_CASE("families") {
  auto wheels = gen_family(Family::Wheel, {3, 5});
  REQUIRE(wheels.size() == 3);
  CHECK(wheels[0].vertex_count() == 4);
  CHECK(wheels[1].vertex_count() == 5);
  CHECK(wheels[2].vertex_count() == 6);

  auto cats = gen_family(Family::CubicCaterpillar, {2, 20});
  CHECK(cats.size() == 19);
  for (const auto& g : cats) CHECK(g.max_degree() == 3);

  FamilyParams batch;
  batch.count = 50;
  batch.seed = 9;
  auto small = gen_family(Family::RandomSmallBatch, batch);
  CHECK(small.size() == 50);
  std::set<std::string> distinct;
  for (const auto& g : small) {
    CHECK(g.vertex_count() <= 14);
    CHECK(g.max_degree() <= 5);
    distinct.insert(format_graph(g));
  }
  CHECK(distinct.size() > 10);

  CHECK(parse_family("wheel") == Family::Wheel);
  CHECK(parse_family("random_small_batch") == Family::RandomSmallBatch);
  try {
    parse_family("petersen");
    FAIL("expected UnknownFamily");
  } catch (const HalinError& e) {
    CHECK(e.code() == Errc::UnknownFamily);
  }
}
