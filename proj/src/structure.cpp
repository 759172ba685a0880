#include "structure.hpp"

#include <algorithm>
#include <map>

namespace ind12 {

namespace {

std::vector<int> two_color(const Graph& t) {
  std::vector<int> color(t.vertex_count(), -1);
  std::vector<Vertex> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : t.neighbors(v))
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        stack.push_back(w);
      }
  }
  return color;
}

}  // namespace

std::optional<Bipartition> is_p2_tree(const Graph& t) {
  if (!t.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  if (t.vertex_count() < 2) throw Error(ErrorCode::precondition, "single vertex has no bipartition");
  auto color = two_color(t);
  auto qualifies = [&](int side) {
    for (Vertex v = 0; v < t.vertex_count(); ++v)
      if (color[v] == side && t.degree(v) > 2) return false;
    return true;
  };
  int side;
  if (qualifies(color[0]))  // prefer the side containing vertex 0
    side = color[0];
  else if (qualifies(1 - color[0]))
    side = 1 - color[0];
  else
    return std::nullopt;
  Bipartition b;
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    (color[v] == side ? b.x_side : b.y_side).push_back(v);
  return b;
}

std::optional<Vertex> strong_support_vertex(const Graph& t) {
  if (!t.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    std::size_t leaves = 0;
    for (Vertex w : t.neighbors(v)) leaves += t.degree(w) == 1;
    if (leaves >= 2) return v;
  }
  return std::nullopt;
}

namespace {

// Leaf-rooted labelling whose x-side components have degree <= 2. One child of
// every x vertex becomes y (the unique leaf child if there is one, otherwise
// the lowest), children of y vertices become x, and x-x edges are cut.
struct Labeling {
  Vertex root = NO_VERTEX;
  std::vector<char> is_y;
  std::vector<Vertex> parent;
  std::vector<int> comp_id;
  std::vector<Vertex> comp_root;                 // per component
  std::vector<std::pair<Vertex, Vertex>> cross;  // removed edges as (parent side, child side)

  bool edge_kept(Vertex a, Vertex b) const { return is_y[a] || is_y[b]; }
};

Labeling build_labeling(const Graph& t) {
  const std::size_t n = t.vertex_count();
  Labeling lab;
  lab.is_y.assign(n, 0);
  lab.parent.assign(n, NO_VERTEX);
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) == 1) {
      lab.root = v;
      break;
    }
  // BFS so parents are labelled before children
  std::vector<Vertex> queue{lab.root};
  std::vector<char> seen(n, 0);
  seen[lab.root] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex v = queue[qi];
    std::vector<Vertex> children;
    for (Vertex w : t.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        lab.parent[w] = v;
        children.push_back(w);
        queue.push_back(w);
      }
    if (children.empty()) continue;
    if (lab.is_y[v]) {
      // children of y stay x
    } else if (children.size() == 1) {
      lab.is_y[children[0]] = 1;
    } else {
      std::vector<Vertex> leaf_children;
      for (Vertex w : children)
        if (t.degree(w) == 1) leaf_children.push_back(w);
      if (leaf_children.size() >= 2)
        throw Error(ErrorCode::precondition, "strong support vertex present");
      Vertex y = leaf_children.empty() ? children[0] : leaf_children[0];
      lab.is_y[y] = 1;
    }
  }
  // components of the kept edges
  lab.comp_id.assign(n, -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (lab.comp_id[v] != -1) continue;
    int id = next++;
    lab.comp_root.push_back(v);
    std::vector<Vertex> stack{v};
    lab.comp_id[v] = id;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      if (lab.parent[u] != NO_VERTEX && lab.comp_id[lab.parent[u]] == -1 &&
          lab.edge_kept(u, lab.parent[u])) {
        lab.comp_id[lab.parent[u]] = id;
        stack.push_back(lab.parent[u]);
      }
      for (Vertex w : t.neighbors(u))
        if (lab.parent[w] == u && lab.comp_id[w] == -1 && lab.edge_kept(u, w)) {
          lab.comp_id[w] = id;
          stack.push_back(w);
        }
    }
  }
  // component roots: top vertex of each component (cut or global root)
  for (Vertex v = 0; v < n; ++v) {
    if (lab.parent[v] == NO_VERTEX || !lab.edge_kept(v, lab.parent[v])) {
      lab.comp_root[lab.comp_id[v]] = v;
      if (lab.parent[v] != NO_VERTEX) lab.cross.emplace_back(lab.parent[v], v);
    }
  }
  std::sort(lab.cross.begin(), lab.cross.end());
  return lab;
}

GeneratingFamily family_from_comp_ids(const Graph& t, const std::vector<int>& comp_id,
                                      const std::vector<char>& is_y,
                                      std::vector<Edge> removed) {
  std::map<int, FamilyComponent> comps;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    FamilyComponent& c = comps[comp_id[v]];
    c.vertices.push_back(v);
    (is_y[v] ? c.parts.y_side : c.parts.x_side).push_back(v);
  }
  GeneratingFamily fam;
  for (auto& [id, c] : comps) fam.components.push_back(std::move(c));
  std::sort(fam.components.begin(), fam.components.end(),
            [](const FamilyComponent& a, const FamilyComponent& b) {
              return a.vertices.front() < b.vertices.front();
            });
  std::sort(removed.begin(), removed.end());
  fam.removed_edges = std::move(removed);
  return fam;
}

}  // namespace

GeneratingFamily generating_family(const Graph& t) {
  if (!t.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  if (t.vertex_count() < 2) throw Error(ErrorCode::precondition, "need at least two vertices");
  if (strong_support_vertex(t))
    throw Error(ErrorCode::precondition, "strong support vertex present");
  Labeling lab = build_labeling(t);
  std::vector<Edge> removed;
  for (const auto& [p, c] : lab.cross) removed.emplace_back(std::min(p, c), std::max(p, c));
  return family_from_comp_ids(t, lab.comp_id, lab.is_y, std::move(removed));
}

GeneratingFamily associated_family(const Graph& t, const VertexSet& s) {
  if (!t.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  ValidationReport rep = validate_set(t, s);
  if (!rep.valid) throw Error(ErrorCode::precondition, "set is not an independent [1,2]-set");
  const std::size_t n = t.vertex_count();
  std::vector<char> in(n, 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<int> comp_id(n, -1);
  std::vector<Edge> removed;
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (comp_id[v] != -1) continue;
    comp_id[v] = next;
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : t.neighbors(u)) {
        if (!in[u] && !in[w]) {
          if (u < w) removed.emplace_back(u, w);
          continue;
        }
        if (comp_id[w] == -1) {
          comp_id[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return family_from_comp_ids(t, comp_id, in, std::move(removed));
}

std::optional<Vertex> membership_blocker(const Graph& t, Vertex v) {
  if (!t.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  if (v >= t.vertex_count()) throw Error(ErrorCode::invalid_argument, "vertex out of range");
  for (Vertex u : t.neighbors(v)) {
    std::size_t leaves = 0;
    for (Vertex w : t.neighbors(u)) leaves += w != v && t.degree(w) == 1;
    if (leaves >= 2) return u;
  }
  return std::nullopt;
}

bool is_semiexcellent(const Graph& t) {
  if (!t.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  if (t.vertex_count() <= 3) return true;  // includes the 3-vertex path
  return !strong_support_vertex(t).has_value();
}

namespace {

// Per-component contribution to the witness candidate.
struct Contribution {
  enum Kind { base, contain, avoid_pair } kind = base;
  Vertex q = NO_VERTEX;       // contain: forced member
  Vertex w = NO_VERTEX;       // avoid_pair: vertex to dominate exactly once inside
  Vertex y = NO_VERTEX;       // avoid_pair: its excluded y-neighbour
};

struct ComponentView {
  const Graph& t;
  const Labeling& lab;
  int id;

  bool in_comp(Vertex v) const { return lab.comp_id[v] == id; }
  std::vector<Vertex> comp_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : t.neighbors(v))
      if (in_comp(w) && lab.edge_kept(v, w)) out.push_back(w);
    return out;
  }
  bool is_tree_leaf(Vertex v) const { return t.degree(v) == 1; }
  // synthetic leaf: the component's top vertex when its parent edge was cut
  std::optional<Vertex> synthetic_root() const {
    Vertex r = lab.comp_root[id];
    if (r == lab.root) return std::nullopt;
    if (lab.parent[r] != NO_VERTEX && !lab.edge_kept(r, lab.parent[r])) return r;
    return std::nullopt;
  }
  std::vector<Vertex> y_side() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
      if (in_comp(v) && lab.is_y[v]) out.push_back(v);
    return out;
  }
};

// (y_side \ N(q)) + q + the tree-leaves two steps from q. Synthetic leaves at
// distance two are left out; they become undominated and are repaired through
// their parent component.
void emit_contain(const ComponentView& c, Vertex q, std::vector<char>& in) {
  std::vector<Vertex> nq = c.comp_neighbors(q);
  auto is_nq = [&](Vertex v) { return std::find(nq.begin(), nq.end(), v) != nq.end(); };
  for (Vertex v : c.y_side())
    if (!is_nq(v)) in[v] = 1;
  in[q] = 1;
  for (Vertex y : nq)
    for (Vertex z : c.comp_neighbors(y))
      if (z != q && c.is_tree_leaf(z)) in[z] = 1;
}

// Set avoiding both w and its neighbour y while dominating w exactly once
// inside the component.
void emit_avoid_pair(const ComponentView& c, Vertex w, Vertex y, std::vector<char>& in) {
  std::vector<Vertex> ys = c.y_side();
  auto add_y_except = [&](std::initializer_list<Vertex> excl) {
    for (Vertex v : ys)
      if (std::find(excl.begin(), excl.end(), v) == excl.end()) in[v] = 1;
  };
  std::optional<Vertex> fake = c.synthetic_root();
  std::vector<Vertex> ny = c.comp_neighbors(y);
  std::vector<Vertex> true_leaves, others;
  for (Vertex z : ny) {
    if (z == w) continue;
    if (c.is_tree_leaf(z))
      true_leaves.push_back(z);
    else if (!(fake && *fake == z))
      others.push_back(z);
  }
  if (!true_leaves.empty()) {
    if (true_leaves.size() > 1) throw Error(ErrorCode::internal, "strong support slipped through");
    add_y_except({y});
    in[true_leaves[0]] = 1;
    return;
  }
  if (others.empty()) {
    // only the synthetic leaf can dominate y
    if (!fake || !(ny.size() == 2 || ny.size() == 1))
      throw Error(ErrorCode::internal, "no replacement dominator for the avoided vertex");
    add_y_except({y});
    in[*fake] = 1;
    return;
  }
  Vertex x1 = others.front();
  std::vector<Vertex> nx1 = c.comp_neighbors(x1);
  if (nx1.size() != 2) throw Error(ErrorCode::internal, "x-side vertex of unexpected degree");
  Vertex y1 = nx1[0] == y ? nx1[1] : nx1[0];
  std::vector<Vertex> lf;
  for (Vertex z : c.comp_neighbors(y1))
    if (z != x1 && c.is_tree_leaf(z)) lf.push_back(z);
  if (lf.size() > 1) throw Error(ErrorCode::internal, "strong support slipped through");
  add_y_except({y, y1});
  in[x1] = 1;
  for (Vertex z : lf) in[z] = 1;
}

}  // namespace

VertexSet witness_containing(const Graph& t, Vertex x) {
  if (!t.is_tree()) throw Error(ErrorCode::not_a_tree, "input is not a tree");
  const std::size_t n = t.vertex_count();
  if (x >= n) throw Error(ErrorCode::invalid_argument, "vertex out of range");
  if (!is_semiexcellent(t))
    throw Error(ErrorCode::precondition, "tree has a vertex in no independent [1,2]-set");
  if (n <= 2) return {x};
  if (n == 3) {
    Vertex centre = 0;
    for (Vertex v = 0; v < 3; ++v)
      if (t.degree(v) == 2) centre = v;
    if (x == centre) return {centre};
    VertexSet ends;
    for (Vertex v = 0; v < 3; ++v)
      if (v != centre) ends.push_back(v);
    return ends;
  }

  Labeling lab = build_labeling(t);
  if (lab.is_y[x]) {
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if (lab.is_y[v]) s.push_back(v);
    return s;
  }

  const int comp_count = static_cast<int>(lab.comp_root.size());
  std::vector<Contribution> plan(comp_count);
  plan[lab.comp_id[x]] = {Contribution::contain, x, NO_VERTEX, NO_VERTEX};

  // Repairs walk strictly upward through the component tree, so they finish
  // within comp_count rounds.
  for (int round = 0; round <= comp_count + 1; ++round) {
    std::vector<char> in(n, 0);
    for (int id = 0; id < comp_count; ++id) {
      ComponentView view{t, lab, id};
      const Contribution& c = plan[id];
      switch (c.kind) {
        case Contribution::base:
          for (Vertex v : view.y_side()) in[v] = 1;
          break;
        case Contribution::contain:
          emit_contain(view, c.q, in);
          break;
        case Contribution::avoid_pair:
          emit_avoid_pair(view, c.w, c.y, in);
          break;
      }
    }
    VertexSet cand;
    for (Vertex v = 0; v < n; ++v)
      if (in[v]) cand.push_back(v);
    ValidationReport rep = validate_set(t, cand);
    if (rep.valid) return cand;

    const Violation& viol = *std::min_element(
        rep.violations.begin(), rep.violations.end(),
        [](const Violation& a, const Violation& b) { return a.v < b.v; });
    if (viol.kind == Violation::not_dominated) {
      // must be a component's synthetic leaf; force its cut parent into the set
      Vertex r = viol.v;
      int rid = lab.comp_id[r];
      if (lab.comp_root[rid] != r || r == lab.root)
        throw Error(ErrorCode::internal, "undominated vertex is not a component root");
      Vertex p = lab.parent[r];
      int pid = lab.comp_id[p];
      if (plan[pid].kind != Contribution::base)
        throw Error(ErrorCode::internal, "repair revisits a component");
      plan[pid] = {Contribution::contain, p, NO_VERTEX, NO_VERTEX};
    } else if (viol.kind == Violation::over_dominated) {
      Vertex w = viol.v;
      int wid = lab.comp_id[w];
      if (lab.is_y[w] || plan[wid].kind != Contribution::base)
        throw Error(ErrorCode::internal, "unexpected over-domination pattern");
      ComponentView view{t, lab, wid};
      Vertex yw = NO_VERTEX;
      for (Vertex u : view.comp_neighbors(w))
        if (!view.is_tree_leaf(u)) {
          yw = u;
          break;
        }
      if (yw == NO_VERTEX)
        throw Error(ErrorCode::internal, "over-dominated vertex has only leaf neighbours");
      plan[wid] = {Contribution::avoid_pair, NO_VERTEX, w, yw};
    } else {
      throw Error(ErrorCode::internal, "witness candidate violates independence");
    }
  }
  throw Error(ErrorCode::internal, "witness repairs did not converge");
}

}  // namespace ind12
