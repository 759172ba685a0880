#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"
#include "label_table.hpp"
#include "oracle.hpp"

namespace ind12 {

// Bottom-up state kept per internal vertex when tables are retained.
struct VertexTables {
  std::vector<LabelTable> steps;     // accumulated tables; steps.back() is the final one
  std::vector<Vertex> merged_child;  // child consumed per step; NO_VERTEX for a star start
  std::vector<Vertex> leaf_children;
};

struct DpRun {
  bool feasible = false;
  std::optional<std::uint32_t> min_size;
  std::uint64_t rule_applications = 0;
  std::vector<VertexTables> tables;  // indexed by vertex; empty for leaves
  LabelTable root_table;
};

// Full run over a rooted tree; keeps every intermediate table so witnesses can
// be reconstructed and per-vertex tables inspected. reverse_children flips the
// processing order of internal children (the result must not change).
DpRun run_dp(const RootedTree& t, bool reverse_children = false);

// Minimum-size set from a feasible run. Deterministic: ties resolve to the
// lowest label and the lexicographically lowest rule pair.
VertexSet extract_witness(const RootedTree& t, const DpRun& run);

// Existence of an independent [1,2]-set. Single rolling table per vertex, no
// provenance; this is the path used for large instances.
bool decide(const Graph& g);

struct DecideStats {
  bool feasible = false;
  std::optional<std::uint32_t> min_size;
  std::uint64_t rule_applications = 0;
};
DecideStats decide_stats(const Graph& g);

std::optional<std::size_t> min_cardinality(const Graph& g);
std::optional<VertexSet> min_witness(const Graph& g);

}  // namespace ind12
