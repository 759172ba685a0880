#include <doctest.h>

#include "label_table.hpp"

using namespace ind12;

namespace {

LabelTable table(std::initializer_list<std::pair<int, std::uint32_t>> entries) {
  LabelTable t;
  for (auto [label, cost] : entries) t.improve(label, cost, {});
  return t;
}

using Map = std::map<int, std::size_t>;

}  // namespace

TEST_CASE("star tables by leaf count") {
  CHECK(star_table(1).to_map() == Map{{0, 1}, {1, 1}});
  CHECK(star_table(2).to_map() == Map{{0, 1}, {2, 2}});
  CHECK(star_table(3).to_map() == Map{{0, 1}});
  CHECK(star_table(6).to_map() == Map{{0, 1}});
  CHECK_THROWS_AS(star_table(0), Error);
}

TEST_CASE("extending a table with a new root above it") {
  CHECK(extend_table(star_table(1)).to_map() == Map{{-1, 1}, {0, 2}, {1, 1}});
  CHECK(extend_table(star_table(2)).to_map() == Map{{-2, 2}, {1, 1}});
  CHECK(extend_table(star_table(3)).to_map() == Map{{1, 1}});
  // a lone -1 child: either the new root joins the set, or the promoted
  // child root does and dominates the new root once
  CHECK(extend_table(table({{-1, 3}})).to_map() == Map{{0, 4}, {1, 4}});
}

TEST_CASE("merging two subtrees at a shared root") {
  LabelTable p2 = star_table(1);  // {0:1, 1:1}
  CHECK(merge_tables(p2, p2).to_map() == Map{{0, 2}, {1, 2}, {2, 2}});

  // two vertices that must both be in the set cannot be adjacent
  LabelTable solo = table({{0, 1}});
  CHECK(merge_tables(solo, solo).empty());

  LabelTable two = star_table(2);  // {0:1, 2:2}
  CHECK(merge_tables(two, two).to_map() == Map{{2, 4}});
}

TEST_CASE("promotion closes a table") {
  LabelTable t = table({{-1, 1}});
  apply_promotion(t);
  CHECK(t.to_map() == Map{{-1, 1}, {0, 2}});
  CHECK(t.prov(0).kind == Provenance::promote);

  // never overrides an equally cheap entry
  LabelTable u = table({{-1, 1}, {0, 2}});
  apply_promotion(u);
  CHECK(u.cost(0) == 2);
  CHECK(u.prov(0).kind == Provenance::none);
}

TEST_CASE("equal-cost merges keep the first rule in pair order") {
  LabelTable a = table({{0, 1}, {1, 1}});
  LabelTable b = table({{-2, 1}, {-1, 1}});
  LabelTable m = merge_tables(a, b);
  CHECK(m.cost(1) == 2);
  CHECK(m.prov(1).kind == Provenance::merge);
  CHECK(m.prov(1).a == 0);
  CHECK(m.prov(1).b == -2);
}

TEST_CASE("table improve and printing") {
  LabelTable t;
  CHECK(t.empty());
  t.improve(1, 5, {});
  t.improve(1, 7, {});  // worse, ignored
  CHECK(t.cost(1) == 5);
  t.improve(1, 3, {});
  CHECK(t.cost(1) == 3);
  CHECK(star_table(2).to_string() == "{0:1, 2:2}");
}
