#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace ind12 {

// Sorted vertex list.
using VertexSet = std::vector<Vertex>;

constexpr std::size_t ORACLE_CAP = 20;

struct Violation {
  enum Kind { not_in_graph, adjacent_members, not_dominated, over_dominated } kind;
  Vertex v;
  std::size_t count = 0;  // neighbours in the set, where relevant
};

struct ValidationReport {
  bool valid = false;
  std::vector<Violation> violations;
};

// Checks the independent [1,2]-set conditions: members pairwise non-adjacent,
// every non-member has 1 or 2 neighbours in the set.
ValidationReport validate_set(const Graph& g, const VertexSet& s);

// One human-readable line per violation ("ok" when valid).
std::string describe(const ValidationReport& rep);

// Backtracking enumeration over all independent [1,2]-sets. The cap bounds the
// vertex count; larger inputs raise Error{cap_exceeded}.
bool oracle_decide(const Graph& g, std::size_t cap = ORACLE_CAP);
std::optional<std::size_t> oracle_min(const Graph& g, std::size_t cap = ORACLE_CAP);
std::vector<VertexSet> oracle_all_sets(const Graph& g, std::size_t cap = ORACLE_CAP);

// Labels describing how a set interacts with a distinguished vertex v of a
// rooted subtree:
//   0   v in S
//   1,2 v outside S with that many neighbours in S
//  -1   no neighbour of v in S, every neighbour dominated exactly once
//  -2   no neighbour of v in S, some neighbour dominated twice
// Enumerates sets over the subtree rooted at v where every vertex other than v
// is dominated once or twice; returns label -> minimum set size.
std::map<int, std::size_t> oracle_label_set(const RootedTree& t, Vertex v,
                                            std::size_t cap = ORACLE_CAP);

}  // namespace ind12
