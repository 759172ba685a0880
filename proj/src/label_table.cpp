#include "label_table.hpp"

#include <sstream>

namespace ind12 {

std::map<int, std::size_t> LabelTable::to_map() const {
  std::map<int, std::size_t> m;
  for (int l = MIN_LABEL; l <= MAX_LABEL; ++l)
    if (present(l)) m[l] = cost(l);
  return m;
}

std::string LabelTable::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int l = MIN_LABEL; l <= MAX_LABEL; ++l) {
    if (!present(l)) continue;
    if (!first) out << ", ";
    first = false;
    out << l << ':' << cost(l);
  }
  out << '}';
  return out.str();
}

void apply_promotion(LabelTable& t) {
  if (t.present(-1))
    t.improve(0, t.cost(-1) + 1, {Provenance::promote, 0, 0});
}

LabelTable star_table(std::size_t leaf_count) {
  if (leaf_count == 0) throw Error(ErrorCode::internal, "star with no leaves");
  LabelTable t;
  t.improve(0, 1, {Provenance::star, 0, 0});  // the centre alone
  if (leaf_count == 1) t.improve(1, 1, {Provenance::star, 0, 0});   // the single leaf
  if (leaf_count == 2) t.improve(2, 2, {Provenance::star, 0, 0});   // both leaves
  return t;
}

LabelTable extend_table(const LabelTable& child) {
  LabelTable c = child;
  apply_promotion(c);
  LabelTable t;
  if (c.present(2)) t.improve(-2, c.cost(2), {Provenance::extend, 2, 0});
  if (c.present(1)) t.improve(-1, c.cost(1), {Provenance::extend, 1, 0});
  for (int a : {-2, -1, 1})  // new root joins the set
    if (c.present(a))
      t.improve(0, c.cost(a) + 1, {Provenance::extend, static_cast<std::int8_t>(a), 0});
  if (c.present(0)) t.improve(1, c.cost(0), {Provenance::extend, 0, 0});
  apply_promotion(t);
  return t;
}

namespace {

struct PairRule {
  int result;
  std::int8_t a, b;
};

// result label <- (child label, accumulated label); pairs listed in
// lexicographic (a,b) order per result so ties resolve to the lowest pair
constexpr PairRule PAIR_RULES[] = {
    {-2, 1, -2}, {-2, 2, -2}, {-2, 2, -1},
    {-1, 1, -1},
    {0, -2, 0},  {0, -1, 0},  {0, 1, 0},
    {1, 0, -2},  {1, 0, -1},  {1, 1, 1},   {1, 2, 1},
    {2, 0, 1},   {2, 1, 2},   {2, 2, 2},
};

}  // namespace

LabelTable merge_tables(const LabelTable& a, const LabelTable& b) {
  LabelTable ca = a, cb = b;
  apply_promotion(ca);
  apply_promotion(cb);
  LabelTable t;
  for (const auto& r : PAIR_RULES) {
    if (!ca.present(r.a) || !cb.present(r.b)) continue;
    std::uint32_t cost = ca.cost(r.a) + cb.cost(r.b);
    t.improve(r.result, cost, {Provenance::merge, r.a, r.b});
  }
  apply_promotion(t);
  return t;
}

}  // namespace ind12
