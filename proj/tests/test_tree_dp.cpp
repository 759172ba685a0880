#include <doctest.h>

#include <random>

#include "test_fixtures.hpp"
#include "tree_dp.hpp"

using namespace ind12;

namespace {
using Map = std::map<int, std::size_t>;
}

TEST_CASE("paths: existence, minimum and frozen witnesses") {
  CHECK(decide(fixtures::path(4)));
  CHECK(min_cardinality(fixtures::path(4)) == 2);
  CHECK(min_witness(fixtures::path(4)) == VertexSet{1, 3});
  CHECK(min_witness(fixtures::path(5)) == VertexSet{1, 4});
  CHECK(min_witness(fixtures::path(6)) == VertexSet{1, 4});
  CHECK(min_witness(fixtures::path(7)) == VertexSet{1, 4, 6});
  for (std::size_t n = 2; n <= 12; ++n)
    CHECK(min_cardinality(fixtures::path(n)) == (n + 2) / 3);
}

TEST_CASE("stars and double stars") {
  for (std::size_t r = 1; r <= 6; ++r) {
    Graph g = fixtures::star(r);
    CHECK(min_cardinality(g) == 1);
    CHECK(min_witness(g) == VertexSet{0});  // the centre dominates every leaf
  }
  CHECK(!decide(fixtures::double_star(3, 3)));
  CHECK(!min_cardinality(fixtures::double_star(3, 3)).has_value());
  CHECK(!min_witness(fixtures::double_star(3, 3)).has_value());
  CHECK(decide(fixtures::double_star(2, 2)));
}

TEST_CASE("one and two vertices are handled directly") {
  Graph one(1);
  CHECK(decide(one));
  CHECK(min_cardinality(one) == 1);
  CHECK(min_witness(one) == VertexSet{0});
  Graph two = fixtures::path(2);
  CHECK(min_cardinality(two) == 1);
  CHECK(min_witness(two) == VertexSet{0});
  CHECK(decide_stats(two).rule_applications == 0);
}

TEST_CASE("non-trees are rejected") {
  CHECK_THROWS_AS(decide(fixtures::cycle(4)), Error);
  Graph forest(4);
  forest.add_edge(0, 1);
  forest.add_edge(2, 3);
  try {
    min_cardinality(forest);
    FAIL("expected a tree error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_tree);
  }
  // right edge count, but a cycle plus an isolated vertex
  Graph sneaky(4);
  sneaky.add_edge(0, 1);
  sneaky.add_edge(1, 2);
  sneaky.add_edge(0, 2);
  CHECK_THROWS_AS(decide(sneaky), Error);
  CHECK_THROWS_AS(min_witness(sneaky), Error);
}

TEST_CASE("full run exposes per-vertex tables") {
  RootedTree t = root_tree(fixtures::path(5), 1);
  DpRun run = run_dp(t);
  REQUIRE(run.feasible);
  CHECK(run.min_size == 2);
  CHECK(run.rule_applications == 4);
  CHECK(run.tables[3].steps.back().to_map() == Map{{0, 1}, {1, 1}});
  CHECK(run.tables[2].steps.back().to_map() == Map{{-1, 1}, {0, 2}, {1, 1}});
  CHECK(run.root_table.to_map() == Map{{0, 2}, {1, 2}, {2, 3}});
  CHECK(extract_witness(t, run) == VertexSet{1, 4});
}

TEST_CASE("infeasible runs stop early and refuse witness extraction") {
  RootedTree t = root_tree(fixtures::double_star(3, 3));
  DpRun run = run_dp(t);
  CHECK(!run.feasible);
  CHECK_THROWS_AS(extract_witness(t, run), Error);
}

TEST_CASE("child order does not change the outcome") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_tree(3 + i % 12, rng());
    RootedTree t = root_tree(g);
    DpRun fwd = run_dp(t);
    DpRun rev = run_dp(t, true);
    CHECK(fwd.feasible == rev.feasible);
    CHECK(fwd.min_size == rev.min_size);
    if (fwd.feasible) {
      CHECK(fwd.root_table.to_map() == rev.root_table.to_map());
      VertexSet w = extract_witness(t, fwd);
      CHECK(validate_set(g, w).valid);
      CHECK(w.size() == *fwd.min_size);
    }
  }
}

TEST_CASE("small random sweep against the oracle") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 120; ++i) {
    Graph g = random_tree(2 + i % 11, rng());
    auto expected = oracle_min(g);
    DecideStats s = decide_stats(g);
    CHECK(s.feasible == expected.has_value());
    if (expected) {
      CHECK(*s.min_size == *expected);
      auto w = min_witness(g);
      REQUIRE(w.has_value());
      CHECK(validate_set(g, *w).valid);
      CHECK(w->size() == *expected);
    }
    CHECK(s.rule_applications <= 2 * g.vertex_count());
  }
}

TEST_CASE("identical inputs give identical witnesses") {
  Graph g = random_tree(40, 99);
  auto a = min_witness(g);
  auto b = min_witness(g);
  CHECK(a == b);
}
