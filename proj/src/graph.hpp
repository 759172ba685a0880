#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ind12 {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

inline constexpr Vertex NO_VERTEX = static_cast<Vertex>(-1);

enum class ErrorCode {
  parse,
  invalid_argument,
  not_a_tree,
  not_connected,
  not_a_cactus,
  precondition,
  cap_exceeded,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Simple undirected graph, vertices 0..n-1, no loops or parallel edges.
// Adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);

  std::vector<Edge> edges() const;  // lexicographically sorted

  bool connected() const;
  bool is_tree() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Text format: first non-comment line is the vertex count, then one "u v" pair
// per line, 0-based. '#' starts a comment. Throws Error{parse} with a line number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Tree rooted at a non-leaf vertex. `order` lists the internal vertices
// bottom-up: every internal descendant of v appears before v.
struct RootedTree {
  Graph tree;
  Vertex root = NO_VERTEX;
  std::vector<Vertex> parent;  // NO_VERTEX for the root
  std::vector<Vertex> order;
};

// root may be omitted (lowest-index internal vertex). Requires a tree with
// at least 3 vertices; the root must not be a leaf.
RootedTree root_tree(const Graph& g, std::optional<Vertex> root = std::nullopt);

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;   // maximal 2-connected pieces (bridges are 2-vertex blocks)
  std::vector<std::vector<Edge>> block_edges;
  std::vector<Vertex> cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);  // requires connected

// Connected graph in which every edge lies on at most one cycle.
bool is_cactus(const Graph& g);

// Uniform labelled tree via a random Pruefer sequence. Deterministic per seed.
Graph random_tree(std::size_t n, std::uint64_t seed);

// Grows a cactus by attaching pendant edges and pendant cycles (length 3..6,
// clamped to the remaining vertex budget). cycle_bias in [0,1] is the
// probability of attempting a cycle at each step; 0 yields a tree.
Graph random_cactus(std::size_t n, double cycle_bias, std::uint64_t seed);

}  // namespace ind12
