#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"
#include "oracle.hpp"

namespace ind12 {

struct Bipartition {
  VertexSet x_side;  // the side whose vertices all have degree <= 2
  VertexSet y_side;
};

struct FamilyComponent {
  VertexSet vertices;
  Bipartition parts;
};

// Forest obtained from a tree by deleting the edges joining two x-side
// vertices; the union of the y-sides is an independent [1,2]-set.
struct GeneratingFamily {
  std::vector<FamilyComponent> components;
  std::vector<Edge> removed_edges;
};

// Bipartite trees whose x-side has maximum degree 2. Returns the bipartition
// with that side as x_side; if both sides qualify, x_side is the side of
// vertex 0. Requires a tree with at least two vertices.
std::optional<Bipartition> is_p2_tree(const Graph& t);

// Lowest-index vertex with two or more leaf neighbours, if any.
std::optional<Vertex> strong_support_vertex(const Graph& t);

// Labels the tree from a leaf and splits it into degree-2-side components.
// Requires a tree with >= 2 vertices and no strong support vertex.
GeneratingFamily generating_family(const Graph& t);

// The family induced by an existing independent [1,2]-set: delete every edge
// with both endpoints outside the set.
GeneratingFamily associated_family(const Graph& t, const VertexSet& s);

// A neighbour u of v with two leaves in N(u) \ {v}, if one exists. Such a u
// certifies that no independent [1,2]-set contains v.
std::optional<Vertex> membership_blocker(const Graph& t, Vertex v);

// Every vertex lies in some independent [1,2]-set. For trees this holds
// exactly when there is no strong support vertex, except the 3-vertex path,
// which qualifies despite its centre.
bool is_semiexcellent(const Graph& t);

// An independent [1,2]-set containing x, built from the generating family
// with component-local repairs. Requires is_semiexcellent(t).
VertexSet witness_containing(const Graph& t, Vertex x);

}  // namespace ind12
