#include "spanning.hpp"

#include <algorithm>
#include <set>

namespace ind12 {

namespace {

struct ClassifyContext {
  std::vector<char> in_set;
  std::vector<int> comp;
  std::vector<int> dominators;  // tree neighbours in the set
};

ClassifyContext make_context(const Graph& tree, const VertexSet& s, const GeneratingFamily& fam) {
  const std::size_t n = tree.vertex_count();
  ClassifyContext ctx;
  ctx.in_set.assign(n, 0);
  for (Vertex v : s)
    if (v < n) ctx.in_set[v] = 1;
  ctx.comp.assign(n, -1);
  for (std::size_t i = 0; i < fam.components.size(); ++i)
    for (Vertex v : fam.components[i].vertices) ctx.comp[v] = static_cast<int>(i);
  ctx.dominators.assign(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : tree.neighbors(v)) ctx.dominators[v] += ctx.in_set[w];
  return ctx;
}

// For an outside vertex, kept component edges are exactly the tree edges to
// set members, so "leaf of its component tree" means one dominator.
EdgeClass classify(const ClassifyContext& ctx, Edge e) {
  auto [a, b] = e;
  if (!ctx.in_set[a] && !ctx.in_set[b]) return {EdgeClass::type_a, -1, ""};
  if (ctx.in_set[a] && ctx.in_set[b])
    return {EdgeClass::invalid, -1, "both endpoints in the set"};
  Vertex u = ctx.in_set[a] ? b : a;
  Vertex v = ctx.in_set[a] ? a : b;
  if (ctx.dominators[u] != 1)
    return {EdgeClass::invalid, -1, "outside endpoint is not a leaf of its component tree"};
  if (ctx.comp[u] != ctx.comp[v])
    return {EdgeClass::invalid, -1, "endpoints lie in different component trees"};
  return {EdgeClass::type_b, ctx.comp[u], ""};
}

}  // namespace

EdgeClass classify_edge(const Graph& tree, const VertexSet& s, const GeneratingFamily& family,
                        Edge e) {
  if (e.first >= tree.vertex_count() || e.second >= tree.vertex_count())
    throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
  if (tree.has_edge(e.first, e.second))
    throw Error(ErrorCode::invalid_argument, "edge belongs to the tree");
  return classify(make_context(tree, s, family), e);
}

std::optional<SpanningCertificate> verify_condition(const Graph& g, const Graph& tree,
                                                    const VertexSet& s, std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<SpanningCertificate> {
    if (why) *why = msg;
    return std::nullopt;
  };
  if (tree.vertex_count() != g.vertex_count()) return fail("vertex counts differ");
  if (!tree.is_tree()) return fail("proposed spanning tree is not a tree");
  for (const Edge& e : tree.edges())
    if (!g.has_edge(e.first, e.second))
      return fail("tree edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                  " is not an edge of the graph");
  ValidationReport rep = validate_set(tree, s);
  if (!rep.valid)
    return fail("set is not an independent [1,2]-set of the tree: " + describe(rep));

  SpanningCertificate cert{tree, s, associated_family(tree, s), {}};
  ClassifyContext ctx = make_context(tree, s, cert.family);
  for (const Edge& e : g.edges()) {
    if (tree.has_edge(e.first, e.second)) continue;
    EdgeClass ec = classify(ctx, e);
    if (ec.kind == EdgeClass::invalid)
      return fail("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + ": " +
                  ec.reason);
    cert.edge_classes.emplace(e, ec);
  }
  return cert;
}

namespace {

bool connected_without(const Graph& g, Edge skip) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex v = queue[qi];
    for (Vertex w : g.neighbors(v)) {
      Edge e{std::min(v, w), std::max(v, w)};
      if (e == skip || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      queue.push_back(w);
    }
  }
  return reached == n;
}

// Shortest a-b path not using the edge ab; lexicographically first by BFS over
// sorted adjacency. Appending ab yields an induced cycle: any chord would give
// a shorter a-b path.
std::vector<Vertex> shortest_detour(const Graph& g, Vertex a, Vertex b) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n, NO_VERTEX);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{a};
  seen[a] = 1;
  for (std::size_t qi = 0; qi < queue.size() && !seen[b]; ++qi) {
    Vertex v = queue[qi];
    for (Vertex w : g.neighbors(v)) {
      if (v == a && w == b) continue;
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (!seen[b]) throw Error(ErrorCode::internal, "no detour around a cycle edge");
  std::vector<Vertex> path;
  for (Vertex v = b; v != NO_VERTEX; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

Edge norm(Vertex u, Vertex v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

SpanningCertificate construct_spanning_tree(const Graph& g, const VertexSet& s) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty graph");
  if (!g.connected()) throw Error(ErrorCode::not_connected, "graph is not connected");
  ValidationReport rep = validate_set(g, s);
  if (!rep.valid)
    throw Error(ErrorCode::precondition,
                "set is not an independent [1,2]-set of the graph: " + describe(rep));
  std::vector<char> in(n, 0);
  for (Vertex v : s) in[v] = 1;

  std::vector<Edge> cur_edges = g.edges();
  std::set<Edge> used;  // edges of cycles processed so far
  while (cur_edges.size() > n - 1) {
    Graph cur = Graph::from_edges(n, cur_edges);
    Edge picked{NO_VERTEX, NO_VERTEX};
    for (const Edge& e : cur_edges)
      if (connected_without(cur, e)) {
        picked = e;
        break;
      }
    if (picked.first == NO_VERTEX)
      throw Error(ErrorCode::internal, "cyclic graph with only bridges");
    std::vector<Vertex> path = shortest_detour(cur, picked.first, picked.second);
    std::vector<Edge> cycle{picked};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) cycle.push_back(norm(path[i], path[i + 1]));
    std::sort(cycle.begin(), cycle.end());

    Edge removed{NO_VERTEX, NO_VERTEX};
    for (const Edge& e : cycle)
      if (!in[e.first] && !in[e.second]) {
        removed = e;
        break;
      }
    if (removed.first == NO_VERTEX) {
      // every cycle edge touches the set exactly once; drop a fresh one
      for (const Edge& e : cycle)
        if (!used.count(e)) {
          removed = e;
          break;
        }
      if (removed.first == NO_VERTEX)
        throw Error(ErrorCode::internal, "every edge of the cycle was used by an earlier cycle");
    }
    used.insert(cycle.begin(), cycle.end());
    cur_edges.erase(std::find(cur_edges.begin(), cur_edges.end(), removed));
  }

  Graph tree = Graph::from_edges(n, cur_edges);
  std::string why;
  auto cert = verify_condition(g, tree, s, &why);
  if (!cert)
    throw Error(ErrorCode::internal, "constructed spanning tree failed verification: " + why);
  return std::move(*cert);
}

bool cactus_decide(const Graph& g, std::uint64_t budget) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::invalid_argument, "empty graph");
  if (!g.connected()) throw Error(ErrorCode::not_connected, "graph is not connected");
  if (!is_cactus(g)) throw Error(ErrorCode::not_a_cactus, "graph is not a cactus");

  BlockDecomposition bd = block_decomposition(g);
  std::vector<std::vector<Edge>> cycle_blocks;
  for (const auto& be : bd.block_edges)
    if (be.size() >= 3) cycle_blocks.push_back(be);

  const std::vector<Edge> all = g.edges();
  std::vector<std::size_t> choice(cycle_blocks.size(), 0);
  std::uint64_t spent = 0;
  auto charge = [&] {
    if (++spent > budget) throw Error(ErrorCode::cap_exceeded, "search budget exceeded");
  };
  while (true) {
    charge();
    std::set<Edge> dropped;
    for (std::size_t i = 0; i < choice.size(); ++i)
      dropped.insert(cycle_blocks[i][choice[i]]);
    std::vector<Edge> tree_edges;
    for (const Edge& e : all)
      if (!dropped.count(e)) tree_edges.push_back(e);
    Graph tree = Graph::from_edges(g.vertex_count(), tree_edges);
    for (const VertexSet& s : oracle_all_sets(tree)) {
      charge();
      if (verify_condition(g, tree, s)) return true;
    }
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < cycle_blocks[i].size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  return false;
}

}  // namespace ind12
