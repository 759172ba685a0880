#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "graph.hpp"

namespace ind12 {

// Subtree labels, describing a candidate set S relative to the subtree root v:
//   0   v in S
//   1,2 v outside S with that many neighbours in S
//  -1   no neighbour of v in S, every neighbour dominated exactly once
//  -2   no neighbour of v in S, some neighbour dominated twice
// Labels 3+ cannot occur (v would be dominated too often).
inline constexpr int MIN_LABEL = -2;
inline constexpr int MAX_LABEL = 2;
inline constexpr std::uint32_t INF_COST = 0xffffffffu;

struct Provenance {
  enum Kind : std::uint8_t { none, star, extend, merge, promote } kind = none;
  std::int8_t a = 0;  // child label (extend/merge)
  std::int8_t b = 0;  // accumulated label (merge)
};

struct TableEntry {
  std::uint32_t cost = INF_COST;
  Provenance prov;
};

// Achievable labels with minimum set sizes for one subtree.
class LabelTable {
 public:
  bool present(int label) const { return at(label).cost != INF_COST; }
  std::uint32_t cost(int label) const { return at(label).cost; }
  const Provenance& prov(int label) const { return at(label).prov; }

  // keeps the entry only if strictly cheaper than what is already there
  void improve(int label, std::uint32_t cost, Provenance prov) {
    TableEntry& e = at(label);
    if (cost < e.cost) e = {cost, prov};
  }

  bool empty() const {
    for (const auto& e : entries_)
      if (e.cost != INF_COST) return false;
    return true;
  }

  std::map<int, std::size_t> to_map() const;  // label -> cost, comparable with the oracle
  std::string to_string() const;

 private:
  TableEntry& at(int label) { return entries_.at(static_cast<std::size_t>(label - MIN_LABEL)); }
  const TableEntry& at(int label) const {
    return entries_.at(static_cast<std::size_t>(label - MIN_LABEL));
  }
  std::array<TableEntry, 5> entries_{};
};

// A set achieving label -1 can always absorb the root vertex, giving label 0
// at one extra unit of cost. Applied to every table before it is consumed or
// exposed, so the root feasibility check only needs labels {0,1,2}.
void apply_promotion(LabelTable& t);

// Table for a star with the given number of leaf children (>= 1).
LabelTable star_table(std::size_t leaf_count);

// Table for the tree formed by putting a new parent above the child's root.
LabelTable extend_table(const LabelTable& child);

// Table for joining a child subtree (a) to the current accumulated tree at the
// same root (b) by one edge.
LabelTable merge_tables(const LabelTable& a, const LabelTable& b);

}  // namespace ind12
