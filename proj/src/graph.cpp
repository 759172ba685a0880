#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

namespace ind12 {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= adj_.size() || v >= adj_.size())
    throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
  if (u == v) throw Error(ErrorCode::invalid_argument, "self-loop");
  if (has_edge(u, v)) throw Error(ErrorCode::invalid_argument, "duplicate edge");
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;  // sorted because adjacency lists are
}

bool Graph::connected() const {
  if (adj_.empty()) return true;
  std::vector<char> seen(adj_.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == adj_.size();
}

bool Graph::is_tree() const {
  return !adj_.empty() && edge_count_ == adj_.size() - 1 && connected();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_n = false;
  std::size_t n = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (!have_n) {
      long long v;
      if (!(ls >> v)) {
        std::string rest;
        if (ls.clear(), ls.str().find_first_not_of(" \t\r") == std::string::npos) continue;
        parse_fail(lineno, "expected vertex count");
      }
      if (v < 0) parse_fail(lineno, "vertex count must be non-negative");
      std::string extra;
      if (ls >> extra) parse_fail(lineno, "trailing tokens after vertex count");
      n = static_cast<std::size_t>(v);
      g = Graph(n);
      have_n = true;
      continue;
    }
    long long a, b;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b)) parse_fail(lineno, "edge needs two endpoints");
    std::string extra;
    if (ls >> extra) parse_fail(lineno, "trailing tokens after edge");
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      parse_fail(lineno, "vertex index out of range");
    if (a == b) parse_fail(lineno, "self-loop");
    if (g.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
      parse_fail(lineno, "duplicate edge");
    g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_n) throw Error(ErrorCode::parse, "empty input");
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

RootedTree root_tree(const Graph& g, std::optional<Vertex> root) {
  if (!g.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  const std::size_t n = g.vertex_count();
  if (n < 3) throw Error(ErrorCode::precondition, "rooted form needs at least 3 vertices");
  Vertex r = NO_VERTEX;
  if (root) {
    r = *root;
    if (r >= n) throw Error(ErrorCode::invalid_argument, "root out of range");
    if (g.degree(r) < 2) throw Error(ErrorCode::precondition, "root must not be a leaf");
  } else {
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) >= 2) {
        r = v;
        break;
      }
  }
  RootedTree t;
  t.tree = g;
  t.root = r;
  t.parent.assign(n, NO_VERTEX);
  t.order.reserve(n);
  // iterative DFS, children in ascending index, post-order
  std::vector<std::pair<Vertex, std::size_t>> stack;
  stack.emplace_back(r, 0);
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    auto nbrs = t.tree.neighbors(v);
    bool descended = false;
    while (i < nbrs.size()) {
      Vertex w = nbrs[i++];
      if (w == t.parent[v]) continue;
      t.parent[w] = v;
      stack.emplace_back(w, 0);
      descended = true;
      break;
    }
    if (descended) continue;
    if (t.tree.degree(v) > 1) t.order.push_back(v);
    stack.pop_back();
  }
  return t;
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (!g.connected()) throw Error(ErrorCode::not_connected, "graph is not connected");
  BlockDecomposition out;
  const std::size_t n = g.vertex_count();
  if (n == 0) return out;
  if (n == 1) {
    out.blocks.push_back({0});
    out.block_edges.emplace_back();
    return out;
  }
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, NO_VERTEX);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> estack;
  int counter = 0;

  auto emit_block = [&](const Edge& top) {
    std::vector<Edge> be;
    while (true) {
      Edge e = estack.back();
      estack.pop_back();
      be.push_back(e);
      if (e == top) break;
    }
    std::vector<Vertex> verts;
    for (const auto& [a, b] : be) {
      verts.push_back(a);
      verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(be.begin(), be.end());
    out.blocks.push_back(std::move(verts));
    out.block_edges.push_back(std::move(be));
  };

  struct Frame {
    Vertex v;
    std::size_t i;
    int child_count;
  };
  std::vector<Frame> stack;
  num[0] = low[0] = counter++;
  stack.push_back({0, 0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = g.neighbors(f.v);
    if (f.i < nbrs.size()) {
      Vertex w = nbrs[f.i++];
      if (num[w] == -1) {
        Edge e{std::min(f.v, w), std::max(f.v, w)};
        estack.push_back(e);
        parent[w] = f.v;
        ++f.child_count;
        num[w] = low[w] = counter++;
        stack.push_back({w, 0, 0});
      } else if (w != parent[f.v] && num[w] < num[f.v]) {
        estack.push_back({std::min(f.v, w), std::max(f.v, w)});
        low[f.v] = std::min(low[f.v], num[w]);
      }
    } else {
      Vertex v = f.v;
      stack.pop_back();
      if (stack.empty()) {
        if (f.child_count >= 2) is_cut[v] = 1;  // root with 2+ DFS children
        break;
      }
      Frame& pf = stack.back();
      Vertex p = pf.v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= num[p]) {
        if (p != 0) is_cut[p] = 1;  // root cut status decided when its frame pops
        emit_block({std::min(p, v), std::max(p, v)});
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  // blocks containing only the root edge case handled; order blocks deterministically
  std::vector<std::size_t> idx(out.blocks.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return out.blocks[a] < out.blocks[b];
  });
  BlockDecomposition sorted;
  sorted.cut_vertices = std::move(out.cut_vertices);
  for (std::size_t i : idx) {
    sorted.blocks.push_back(std::move(out.blocks[i]));
    sorted.block_edges.push_back(std::move(out.block_edges[i]));
  }
  return sorted;
}

bool is_cactus(const Graph& g) {
  if (!g.connected()) return false;
  auto dec = block_decomposition(g);
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    std::size_t nv = dec.blocks[i].size(), ne = dec.block_edges[i].size();
    if (ne <= 1) continue;       // bridge (or isolated vertex)
    if (ne != nv) return false;  // a 2-connected block that is not a single cycle
  }
  return true;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty tree");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> pruefer(n - 2);
  for (auto& p : pruefer) p = pick(rng);
  std::vector<std::size_t> deg(n, 1);
  for (Vertex p : pruefer) ++deg[p];
  // standard decode
  Vertex leaf = NO_VERTEX;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) {
      leaf = v;
      break;
    }
  Vertex ptr = leaf;
  for (Vertex p : pruefer) {
    g.add_edge(leaf, p);
    --deg[leaf];
    if (--deg[p] == 1 && p < ptr) {
      leaf = p;
    } else {
      while (deg[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  // join the two remaining degree-1 vertices
  Vertex a = NO_VERTEX, b = NO_VERTEX;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) {
      if (a == NO_VERTEX)
        a = v;
      else
        b = v;
    }
  g.add_edge(a, b);
  return g;
}

Graph random_cactus(std::size_t n, double cycle_bias, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty graph");
  if (cycle_bias < 0.0 || cycle_bias > 1.0)
    throw Error(ErrorCode::invalid_argument, "cycle_bias must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::size_t built = 1;
  while (built < n) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(built - 1));
    Vertex at = pick(rng);
    std::size_t remaining = n - built;
    bool cycle = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < cycle_bias;
    if (cycle && remaining >= 2) {
      std::size_t maxlen = std::min<std::size_t>(6, remaining + 1);
      std::uniform_int_distribution<std::size_t> len(3, maxlen);
      std::size_t L = len(rng);
      Vertex prev = at;
      for (std::size_t i = 0; i + 1 < L; ++i) {
        Vertex w = static_cast<Vertex>(built++);
        edges.emplace_back(std::min(prev, w), std::max(prev, w));
        prev = w;
      }
      edges.emplace_back(std::min(at, prev), std::max(at, prev));
    } else {
      Vertex w = static_cast<Vertex>(built++);
      edges.emplace_back(std::min(at, w), std::max(at, w));
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace ind12
