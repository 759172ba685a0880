#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <ind12.h>

namespace {

struct GraphHandle {
  ind12_graph* g = nullptr;
  ~GraphHandle() { ind12_graph_free(g); }
};

struct Str {
  char* s = nullptr;
  ~Str() { ind12_string_free(s); }
  std::string view() const { return s ? std::string(s) : std::string(); }
};

ind12_graph* must_parse(const char* text) {
  ind12_graph* g = nullptr;
  REQUIRE(ind12_graph_parse(text, &g) == IND12_OK);
  return g;
}

constexpr const char* P4 = "4\n0 1\n1 2\n2 3\n";

}  // namespace

TEST_CASE("graph lifecycle through the C interface") {
  GraphHandle h{must_parse(P4)};
  CHECK(ind12_graph_vertex_count(h.g) == 4);
  CHECK(ind12_graph_edge_count(h.g) == 3);
  CHECK(ind12_graph_is_tree(h.g) == 1);
  CHECK(ind12_graph_is_connected(h.g) == 1);
  CHECK(ind12_graph_is_cactus(h.g) == 1);
  CHECK(std::string(ind12_last_error()).empty());

  Str text;
  REQUIRE(ind12_graph_serialize(h.g, &text.s) == IND12_OK);
  CHECK(text.view() == P4);

  const uint32_t endpoints[] = {0, 1, 1, 2, 2, 3};
  GraphHandle h2;
  REQUIRE(ind12_graph_from_edges(4, endpoints, 3, &h2.g) == IND12_OK);
  Str text2;
  REQUIRE(ind12_graph_serialize(h2.g, &text2.s) == IND12_OK);
  CHECK(text2.view() == text.view());

  ind12_graph_free(nullptr);  // harmless
  ind12_string_free(nullptr);
}

TEST_CASE("parse failures set the thread error message") {
  ind12_graph* g = nullptr;
  CHECK(ind12_graph_parse("4\n0 1\n0\n", &g) == IND12_EPARSE);
  CHECK(std::string(ind12_last_error()).find("line 3") != std::string::npos);
  CHECK(ind12_graph_parse(nullptr, &g) == IND12_EINVAL);
  CHECK(ind12_graph_parse("2\n0 5\n", &g) == IND12_EPARSE);

  // success clears the message again
  GraphHandle ok{must_parse(P4)};
  CHECK(std::string(ind12_last_error()).empty());
}

TEST_CASE("set checking") {
  GraphHandle h{must_parse(P4)};
  const uint32_t good[] = {0, 2};
  Str rep;
  CHECK(ind12_check_set(h.g, good, 2, &rep.s) == IND12_OK);
  CHECK(rep.view() == "ok");

  const uint32_t bad[] = {0, 1};
  Str rep2;
  CHECK(ind12_check_set(h.g, bad, 2, &rep2.s) == IND12_NO);
  CHECK(rep2.view().find("adjacent") != std::string::npos);
  CHECK(ind12_check_set(h.g, nullptr, 0, nullptr) == IND12_NO);  // empty set, report skipped
}

TEST_CASE("tree decision, minimum, witness and stats") {
  GraphHandle p4{must_parse(P4)};
  CHECK(ind12_tree_decide(p4.g) == IND12_OK);

  uint32_t min_size = 0;
  REQUIRE(ind12_tree_min(p4.g, &min_size) == IND12_OK);
  CHECK(min_size == 2);

  uint64_t apps = 0;
  REQUIRE(ind12_tree_stats(p4.g, &min_size, &apps) == IND12_OK);
  CHECK(min_size == 2);
  CHECK(apps <= 8);
  REQUIRE(ind12_tree_stats(p4.g, nullptr, nullptr) == IND12_OK);

  uint32_t buf[4];
  size_t len = 0;
  REQUIRE(ind12_tree_witness(p4.g, buf, 4, &len) == IND12_OK);
  REQUIRE(len == 2);
  CHECK(buf[0] == 1);
  CHECK(buf[1] == 3);
  CHECK(ind12_tree_witness(p4.g, buf, 1, &len) == IND12_EINVAL);  // too small
  CHECK(std::string(ind12_last_error()).find("too small") != std::string::npos);

  GraphHandle ds{must_parse("8\n0 1\n0 2\n0 3\n0 4\n4 5\n4 6\n4 7\n")};
  CHECK(ind12_tree_decide(ds.g) == IND12_NO);
  CHECK(ind12_tree_min(ds.g, &min_size) == IND12_NO);
  CHECK(ind12_tree_witness(ds.g, buf, 4, &len) == IND12_NO);

  GraphHandle c4{must_parse("4\n0 1\n1 2\n2 3\n0 3\n")};
  CHECK(ind12_tree_decide(c4.g) == IND12_ENOTTREE);
}

TEST_CASE("semiexcellence, witness containing, decomposition") {
  GraphHandle p5{must_parse("5\n0 1\n1 2\n2 3\n3 4\n")};
  CHECK(ind12_tree_semiexcellent(p5.g) == IND12_OK);

  uint32_t buf[5];
  size_t len = 0;
  REQUIRE(ind12_tree_witness_containing(p5.g, 2, buf, 5, &len) == IND12_OK);
  REQUIRE(len == 3);
  CHECK(buf[0] == 0);
  CHECK(buf[1] == 2);
  CHECK(buf[2] == 4);

  GraphHandle star{must_parse("4\n0 1\n0 2\n0 3\n")};
  CHECK(ind12_tree_semiexcellent(star.g) == IND12_NO);
  CHECK(ind12_tree_witness_containing(star.g, 1, buf, 5, &len) == IND12_EPRECOND);

  Str dec;
  REQUIRE(ind12_tree_decompose(p5.g, &dec.s) == IND12_OK);
  CHECK(dec.view() ==
        "components = 1\n"
        "component 0 = 0[x] 1[y] 2[x] 3[y] 4[x]\n"
        "removed =\n");
}

TEST_CASE("exhaustive search endpoints") {
  GraphHandle p4{must_parse(P4)};
  CHECK(ind12_oracle_decide(p4.g, 0) == IND12_OK);

  uint32_t min_size = 0;
  REQUIRE(ind12_oracle_min(p4.g, 0, &min_size) == IND12_OK);
  CHECK(min_size == 2);

  Str sets;
  REQUIRE(ind12_oracle_sets(p4.g, 0, &sets.s) == IND12_OK);
  CHECK(sets.view() == "0 2\n0 3\n1 3\n");

  GraphHandle big;
  REQUIRE(ind12_random_tree(30, 7, &big.g) == IND12_OK);
  CHECK(ind12_oracle_decide(big.g, 0) == IND12_ECAP);
  CHECK(ind12_oracle_decide(big.g, 40) == IND12_OK);
}

TEST_CASE("random generators are deterministic") {
  GraphHandle a, b;
  REQUIRE(ind12_random_tree(12, 99, &a.g) == IND12_OK);
  REQUIRE(ind12_random_tree(12, 99, &b.g) == IND12_OK);
  Str sa, sb;
  REQUIRE(ind12_graph_serialize(a.g, &sa.s) == IND12_OK);
  REQUIRE(ind12_graph_serialize(b.g, &sb.s) == IND12_OK);
  CHECK(sa.view() == sb.view());
  CHECK(ind12_graph_is_tree(a.g) == 1);

  GraphHandle c;
  REQUIRE(ind12_random_cactus(15, 0.6, 5, &c.g) == IND12_OK);
  CHECK(ind12_graph_is_cactus(c.g) == 1);
}

TEST_CASE("spanning verification and construction round trip") {
  GraphHandle c4{must_parse("4\n0 1\n1 2\n2 3\n0 3\n")};
  const uint32_t s[] = {1, 3};

  Str tree_text, report;
  REQUIRE(ind12_spanning_construct(c4.g, s, 2, &tree_text.s, &report.s) == IND12_OK);
  CHECK(report.view() ==
        "non-tree edges = 1\n"
        "0-1 = type B component 0\n");

  GraphHandle tree{must_parse(tree_text.s)};
  Str verify;
  REQUIRE(ind12_spanning_verify(c4.g, tree.g, s, 2, &verify.s) == IND12_OK);
  CHECK(verify.view().rfind("ok\n", 0) == 0);

  // a tree that fails the condition: the remaining chord joins two members
  GraphHandle p4{must_parse(P4)};
  const uint32_t ends[] = {0, 3};
  Str why;
  CHECK(ind12_spanning_verify(c4.g, p4.g, ends, 2, &why.s) == IND12_NO);
  CHECK(why.view().find("0-3") != std::string::npos);
}

TEST_CASE("cactus decision through the C interface") {
  GraphHandle c5{must_parse("5\n0 1\n1 2\n2 3\n3 4\n0 4\n")};
  CHECK(ind12_cactus_decide(c5.g, 0) == IND12_OK);

  GraphHandle ds{must_parse("8\n0 1\n0 2\n0 3\n0 4\n4 5\n4 6\n4 7\n")};
  CHECK(ind12_cactus_decide(ds.g, 0) == IND12_NO);

  GraphHandle c6{must_parse("6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")};
  CHECK(ind12_cactus_decide(c6.g, 1) == IND12_ECAP);
}
