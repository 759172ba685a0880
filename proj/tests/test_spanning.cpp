#include <doctest.h>

#include <random>

#include "spanning.hpp"
#include "test_fixtures.hpp"
#include "tree_dp.hpp"

using namespace ind12;

namespace {

// tree plus two chords where the two cycles share three edges; the tree pair
// (tree, {1,3,8}) certifies the spanning condition although the graph itself
// has no independent [1,2]-set
Graph shared_edge_tree() {
  Graph t(9);
  t.add_edge(0, 1);
  t.add_edge(1, 2);
  t.add_edge(2, 3);
  t.add_edge(3, 4);
  t.add_edge(3, 5);
  t.add_edge(3, 6);
  t.add_edge(3, 7);
  t.add_edge(7, 8);
  return t;
}

Graph shared_edge_graph() {
  Graph g = shared_edge_tree();
  g.add_edge(0, 3);
  g.add_edge(0, 8);
  return g;
}

}  // namespace

TEST_CASE("edge classification") {
  // removing one edge of a 5-cycle leaves a path with both chord ends outside
  Graph tree5(5);
  tree5.add_edge(0, 1);
  tree5.add_edge(1, 2);
  tree5.add_edge(2, 3);
  tree5.add_edge(0, 4);
  VertexSet s5{0, 2};
  GeneratingFamily f5 = associated_family(tree5, s5);
  EdgeClass a = classify_edge(tree5, s5, f5, {3, 4});
  CHECK(a.kind == EdgeClass::type_a);

  // a 4-cycle: the chord joins a member to a once-dominated leaf
  Graph tree4(4);
  tree4.add_edge(1, 2);
  tree4.add_edge(2, 3);
  tree4.add_edge(0, 3);
  VertexSet s4{1, 3};
  GeneratingFamily f4 = associated_family(tree4, s4);
  EdgeClass b = classify_edge(tree4, s4, f4, {0, 1});
  CHECK(b.kind == EdgeClass::type_b);
  CHECK(b.component == 0);

  // two members joined directly
  Graph p4 = fixtures::path(4);
  VertexSet ends{0, 3};
  GeneratingFamily fp = associated_family(p4, ends);
  EdgeClass both = classify_edge(p4, ends, fp, {0, 3});
  CHECK(both.kind == EdgeClass::invalid);
  CHECK(both.reason.find("both endpoints") != std::string::npos);

  // outside endpoint dominated twice: not a leaf of its component tree
  Graph p5 = fixtures::path(5);
  VertexSet alt{0, 2, 4};
  GeneratingFamily fa = associated_family(p5, alt);
  EdgeClass two_dom = classify_edge(p5, alt, fa, {1, 4});
  CHECK(two_dom.kind == EdgeClass::invalid);
  CHECK(two_dom.reason.find("not a leaf") != std::string::npos);

  // endpoints in different component trees
  EdgeClass split = classify_edge(p4, ends, fp, {1, 3});
  CHECK(split.kind == EdgeClass::invalid);
  CHECK(split.reason.find("different component") != std::string::npos);

  CHECK_THROWS_AS(classify_edge(p4, ends, fp, {1, 2}), Error);  // a tree edge
}

TEST_CASE("verifying a proposed spanning tree") {
  Graph c4 = fixtures::cycle(4);
  Graph tree(4);
  tree.add_edge(1, 2);
  tree.add_edge(2, 3);
  tree.add_edge(0, 3);
  auto cert = verify_condition(c4, tree, {1, 3});
  REQUIRE(cert.has_value());
  CHECK(cert->edge_classes.size() == 1);
  CHECK(cert->edge_classes.at({0, 1}).kind == EdgeClass::type_b);

  std::string why;
  // an admissible set of the tree, but the remaining chord joins two members
  CHECK(!verify_condition(c4, fixtures::path(4), {0, 3}, &why).has_value());
  CHECK(why.find("0-3") != std::string::npos);

  CHECK(!verify_condition(c4, fixtures::path(5), {1, 3}, &why).has_value());
  CHECK(why == "vertex counts differ");

  CHECK(!verify_condition(c4, fixtures::cycle(4), {1, 3}, &why).has_value());
  CHECK(why == "proposed spanning tree is not a tree");

  Graph other(4);  // an edge the graph does not have
  other.add_edge(0, 2);
  other.add_edge(1, 2);
  other.add_edge(2, 3);
  CHECK(!verify_condition(c4, other, {0, 3}, &why).has_value());
  CHECK(why.find("not an edge of the graph") != std::string::npos);

  CHECK(!verify_condition(c4, tree, {1, 2}, &why).has_value());
  CHECK(why.find("not an independent [1,2]-set") != std::string::npos);
}

TEST_CASE("constructing a spanning tree from a set") {
  // a tree input comes back unchanged
  Graph p6 = fixtures::path(6);
  SpanningCertificate id = construct_spanning_tree(p6, {1, 4});
  CHECK(id.tree.edges() == p6.edges());
  CHECK(id.edge_classes.empty());

  // 5-cycle: the only both-outside edge of the cycle goes
  SpanningCertificate c5 = construct_spanning_tree(fixtures::cycle(5), {0, 2});
  CHECK(c5.edge_classes.size() == 1);
  CHECK(c5.edge_classes.count({3, 4}) == 1);
  CHECK(c5.edge_classes.at({3, 4}).kind == EdgeClass::type_a);

  // 4-cycle with opposite members: no both-outside edge exists, so the first
  // cycle edge goes and the verifier sees it as type B
  SpanningCertificate c4 = construct_spanning_tree(fixtures::cycle(4), {1, 3});
  CHECK(c4.edge_classes.size() == 1);
  CHECK(c4.edge_classes.count({0, 1}) == 1);
  CHECK(c4.edge_classes.at({0, 1}).kind == EdgeClass::type_b);

  CHECK_THROWS_AS(construct_spanning_tree(fixtures::cycle(4), {0, 1}), Error);

  // every oracle set of assorted small graphs yields a verified tree
  std::mt19937_64 rng(555);
  for (int i = 0; i < 25; ++i) {
    std::size_t n = 4 + i % 5;
    Graph g = random_tree(n, rng());
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    for (int extra = 0; extra < 3; ++extra) {
      Vertex u = pick(rng), v = pick(rng);
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    for (const auto& s : oracle_all_sets(g)) {
      SpanningCertificate cert = construct_spanning_tree(g, s);
      CHECK(verify_condition(g, cert.tree, s).has_value());
    }
  }
}

TEST_CASE("deciding cactus graphs") {
  CHECK(cactus_decide(fixtures::cycle(5)));
  CHECK(cactus_decide(fixtures::cycle(4)));
  CHECK(cactus_decide(fixtures::path(7)));
  CHECK(!cactus_decide(fixtures::double_star(3, 3)));

  Graph tri_pendant(4);  // triangle with a tail
  tri_pendant.add_edge(0, 1);
  tri_pendant.add_edge(0, 2);
  tri_pendant.add_edge(1, 2);
  tri_pendant.add_edge(2, 3);
  CHECK(cactus_decide(tri_pendant));

  // agreement with direct enumeration
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_cactus(4 + i % 8, 0.5, rng());
    CHECK(cactus_decide(g) == oracle_decide(g));
  }

  CHECK_THROWS_AS(cactus_decide(shared_edge_graph()), Error);  // not a cactus
  try {
    cactus_decide(fixtures::cycle(6), 1);
    FAIL("expected budget exhaustion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cap_exceeded);
  }
}

TEST_CASE("the spanning condition does not transfer across shared cycles") {
  Graph g = shared_edge_graph();
  Graph t = shared_edge_tree();
  VertexSet s{1, 3, 8};
  REQUIRE(validate_set(t, s).valid);
  auto cert = verify_condition(g, t, s);
  REQUIRE(cert.has_value());
  CHECK(cert->edge_classes.size() == 2);
  CHECK(cert->edge_classes.at({0, 3}).kind == EdgeClass::type_b);
  CHECK(cert->edge_classes.at({0, 8}).kind == EdgeClass::type_b);
  CHECK(!is_cactus(g));
  CHECK(!oracle_decide(g));
}
