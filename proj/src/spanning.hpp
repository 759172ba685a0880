#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "graph.hpp"
#include "oracle.hpp"
#include "structure.hpp"

namespace ind12 {

// Classification of a non-tree edge against a (tree, set, family) triple.
// type_a: both endpoints outside the set. type_b: the outside endpoint is a
// leaf of its component tree and the other endpoint is a set member of the
// same component.
struct EdgeClass {
  enum Kind { type_a, type_b, invalid };
  Kind kind = invalid;
  int component = -1;  // type_b: index of the shared component
  std::string reason;  // invalid: first clause that failed
};

struct SpanningCertificate {
  Graph tree;
  VertexSet set;
  GeneratingFamily family;
  std::map<Edge, EdgeClass> edge_classes;  // one entry per edge of g not in tree
};

// e must not be a tree edge.
EdgeClass classify_edge(const Graph& tree, const VertexSet& s, const GeneratingFamily& family,
                        Edge e);

// Checks that tree spans g, that s is an independent [1,2]-set of tree, and
// that every non-tree edge of g is type A or type B. On failure returns
// nothing and, when why != nullptr, stores the first diagnostic.
std::optional<SpanningCertificate> verify_condition(const Graph& g, const Graph& tree,
                                                    const VertexSet& s,
                                                    std::string* why = nullptr);

// Turns g into a spanning tree by repeatedly removing one edge of an induced
// cycle: an edge with both endpoints outside s when the cycle has one,
// otherwise a cycle edge untouched by every earlier cycle. Requires s to be a
// valid independent [1,2]-set of g; the result passes verify_condition.
SpanningCertificate construct_spanning_tree(const Graph& g, const VertexSet& s);

// Decides whether a cactus graph has an independent [1,2]-set by enumerating
// spanning trees (one deleted edge per cycle block) and, per tree, its sets,
// looking for a pair that passes verify_condition. budget caps the combined
// number of candidate trees and (tree, set) checks.
bool cactus_decide(const Graph& g, std::uint64_t budget = 1000000);

}  // namespace ind12
