#include "tree_dp.hpp"

#include <algorithm>

namespace ind12 {

namespace {

struct Children {
  std::vector<std::vector<Vertex>> internal;  // per vertex, ascending
  std::vector<std::vector<Vertex>> leaves;
};

Children collect_children(const RootedTree& t) {
  const std::size_t n = t.tree.vertex_count();
  Children c;
  c.internal.resize(n);
  c.leaves.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v == t.root) continue;
    Vertex p = t.parent[v];
    if (t.tree.degree(v) == 1)
      c.leaves[p].push_back(v);
    else
      c.internal[p].push_back(v);
  }
  return c;
}

std::optional<std::uint32_t> root_minimum(const LabelTable& root_table) {
  std::uint32_t best = INF_COST;
  for (int l : {0, 1, 2})
    if (root_table.present(l)) best = std::min(best, root_table.cost(l));
  if (best == INF_COST) return std::nullopt;
  return best;
}

}  // namespace

DpRun run_dp(const RootedTree& t, bool reverse_children) {
  DpRun run;
  const std::size_t n = t.tree.vertex_count();
  Children ch = collect_children(t);
  run.tables.resize(n);
  for (Vertex v : t.order) {
    VertexTables& vt = run.tables[v];
    vt.leaf_children = std::move(ch.leaves[v]);
    std::vector<Vertex> internals = ch.internal[v];
    if (reverse_children) std::reverse(internals.begin(), internals.end());
    std::size_t next = 0;
    if (!vt.leaf_children.empty()) {
      vt.steps.push_back(star_table(vt.leaf_children.size()));
      vt.merged_child.push_back(NO_VERTEX);
    } else {
      Vertex u = internals.at(0);
      vt.steps.push_back(extend_table(run.tables[u].steps.back()));
      vt.merged_child.push_back(u);
      next = 1;
    }
    ++run.rule_applications;
    for (; next < internals.size(); ++next) {
      Vertex u = internals[next];
      vt.steps.push_back(merge_tables(run.tables[u].steps.back(), vt.steps.back()));
      vt.merged_child.push_back(u);
      ++run.rule_applications;
    }
    if (vt.steps.back().empty()) return run;  // no admissible label: no set exists
  }
  run.root_table = run.tables[t.root].steps.back();
  run.min_size = root_minimum(run.root_table);
  run.feasible = run.min_size.has_value();
  return run;
}

VertexSet extract_witness(const RootedTree& t, const DpRun& run) {
  if (!run.feasible) throw Error(ErrorCode::precondition, "witness of an infeasible run");
  int best_label = -3;
  std::uint32_t best = INF_COST;
  for (int l : {0, 1, 2}) {
    if (!run.root_table.present(l)) continue;
    if (run.root_table.cost(l) < best) {
      best = run.root_table.cost(l);
      best_label = l;
    }
  }
  VertexSet witness;
  struct Item {
    Vertex v;
    std::size_t step;
    int label;
  };
  std::vector<Item> stack;
  stack.push_back({t.root, run.tables[t.root].steps.size() - 1, best_label});
  while (!stack.empty()) {
    auto [v, step, label] = stack.back();
    stack.pop_back();
    const VertexTables& vt = run.tables[v];
    const LabelTable& table = vt.steps.at(step);
    if (!table.present(label)) throw Error(ErrorCode::internal, "witness walk hit an absent label");
    const Provenance& p = table.prov(label);
    switch (p.kind) {
      case Provenance::star:
        if (label == 0) witness.push_back(v);
        if (label == 1) witness.push_back(vt.leaf_children.at(0));
        if (label == 2) {
          witness.push_back(vt.leaf_children.at(0));
          witness.push_back(vt.leaf_children.at(1));
        }
        break;
      case Provenance::extend: {
        Vertex child = vt.merged_child.at(step);
        if (label == 0) witness.push_back(v);
        stack.push_back({child, run.tables[child].steps.size() - 1, p.a});
        break;
      }
      case Provenance::merge: {
        Vertex child = vt.merged_child.at(step);
        stack.push_back({child, run.tables[child].steps.size() - 1, p.a});
        stack.push_back({v, step - 1, p.b});
        break;
      }
      case Provenance::promote:
        witness.push_back(v);
        stack.push_back({v, step, -1});
        break;
      case Provenance::none:
        throw Error(ErrorCode::internal, "witness walk hit an unset entry");
    }
  }
  std::sort(witness.begin(), witness.end());
  witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
  return witness;
}

namespace {

// Decision-only pass. Certifies tree-ness with a union-find sweep, then fires
// the label rules while a single depth-first walk unwinds, so an empty table
// stops the run without touching the rest of the tree. A flat adjacency copy
// keeps very large inputs cheap. Expects edge_count == n - 1 with n >= 3.
DecideStats fast_dp(const Graph& g) {
  DecideStats out;
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> off(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) off[v + 1] = off[v] + static_cast<std::uint32_t>(g.degree(v));
  std::vector<Vertex> flat(off[n]);
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    std::copy(nbrs.begin(), nbrs.end(), flat.begin() + off[v]);
  }
  auto deg = [&](Vertex v) { return off[v + 1] - off[v]; };

  // n - 1 edges and no cycle: a tree, with no separate connectivity walk
  std::vector<Vertex> uf(n);
  for (Vertex v = 0; v < n; ++v) uf[v] = v;
  auto find = [&](Vertex v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (Vertex v = 0; v < n; ++v)
    for (std::uint32_t i = off[v]; i < off[v + 1]; ++i) {
      Vertex w = flat[i];
      if (v >= w) continue;
      Vertex a = find(v), b = find(w);
      if (a == b) throw Error(ErrorCode::not_a_tree, "input is not a tree");
      uf[a] = b;
    }

  Vertex root = 0;
  while (deg(root) < 2) ++root;

  // depth-first with children ascending, as in root_tree; a vertex's rules
  // fire when it pops, so both solver paths share one application sequence
  std::vector<Vertex> parent(n, NO_VERTEX);
  parent[root] = root;  // marks the root visited; no neighbour equals it
  std::vector<LabelTable> table(n);
  std::vector<std::pair<Vertex, std::uint32_t>> stack;
  stack.emplace_back(root, off[root]);
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    bool descended = false;
    while (i < off[v + 1]) {
      Vertex w = flat[i++];
      if (parent[w] != NO_VERTEX) continue;  // only ever the parent link
      parent[w] = v;
      stack.emplace_back(w, off[w]);
      descended = true;
      break;
    }
    if (descended) continue;
    const Vertex done = v;
    stack.pop_back();
    if (deg(done) == 1) continue;
    std::uint32_t leaves = 0;
    for (std::uint32_t j = off[done]; j < off[done + 1]; ++j)
      if (deg(flat[j]) == 1) ++leaves;  // the parent always has degree >= 2
    LabelTable cur;
    std::uint32_t j = off[done];
    if (leaves > 0) {
      cur = star_table(leaves);
    } else {
      while (flat[j] == parent[done]) ++j;  // first internal child
      cur = extend_table(table[flat[j++]]);
    }
    ++out.rule_applications;
    for (; j < off[done + 1]; ++j) {
      Vertex w = flat[j];
      if (w == parent[done] || deg(w) == 1) continue;
      cur = merge_tables(table[w], cur);
      ++out.rule_applications;
    }
    if (cur.empty()) return out;
    table[done] = cur;
  }
  out.min_size = root_minimum(table[root]);
  out.feasible = out.min_size.has_value();
  return out;
}

}  // namespace

DecideStats decide_stats(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 2) {
    if (!g.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
    // a single vertex, or one endpoint of an edge
    return {true, 1, 0};
  }
  if (g.edge_count() != n - 1) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  return fast_dp(g);
}

bool decide(const Graph& g) { return decide_stats(g).feasible; }

std::optional<std::size_t> min_cardinality(const Graph& g) {
  DecideStats s = decide_stats(g);
  if (!s.feasible) return std::nullopt;
  return *s.min_size;
}

std::optional<VertexSet> min_witness(const Graph& g) {
  if (!g.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  if (g.vertex_count() <= 2) return VertexSet{0};
  RootedTree t = root_tree(g);
  DpRun run = run_dp(t);
  if (!run.feasible) return std::nullopt;
  return extract_witness(t, run);
}

}  // namespace ind12
