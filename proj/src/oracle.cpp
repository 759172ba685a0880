#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace ind12 {

ValidationReport validate_set(const Graph& g, const VertexSet& s) {
  ValidationReport rep;
  const std::size_t n = g.vertex_count();
  std::vector<char> in(n, 0);
  for (Vertex v : s) {
    if (v >= n) {
      rep.violations.push_back({Violation::not_in_graph, v, 0});
      continue;
    }
    in[v] = 1;
  }
  for (Vertex v : s) {
    if (v >= n) continue;
    for (Vertex w : g.neighbors(v))
      if (in[w] && v < w) rep.violations.push_back({Violation::adjacent_members, v, 0});
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) continue;
    std::size_t c = 0;
    for (Vertex w : g.neighbors(v)) c += in[w];
    if (c == 0) rep.violations.push_back({Violation::not_dominated, v, 0});
    if (c > 2) rep.violations.push_back({Violation::over_dominated, v, c});
  }
  rep.valid = rep.violations.empty();
  return rep;
}

std::string describe(const ValidationReport& rep) {
  if (rep.valid) return "ok";
  std::string out;
  for (const Violation& viol : rep.violations) {
    if (!out.empty()) out += '\n';
    switch (viol.kind) {
      case Violation::not_in_graph:
        out += "vertex " + std::to_string(viol.v) + " is not in the graph";
        break;
      case Violation::adjacent_members:
        out += "vertex " + std::to_string(viol.v) + " is adjacent to another member";
        break;
      case Violation::not_dominated:
        out += "vertex " + std::to_string(viol.v) + " has no neighbour in the set";
        break;
      case Violation::over_dominated:
        out += "vertex " + std::to_string(viol.v) + " has " + std::to_string(viol.count) +
               " neighbours in the set";
        break;
    }
  }
  return out;
}

namespace {

// Shared backtracking core. `exempt` (if any) may end up undominated or in no
// particular state; every other vertex outside the set needs 1..2 neighbours
// in it. Calls sink(membership) for every complete admissible assignment.
void enumerate_sets(const Graph& g, std::optional<Vertex> exempt,
                    const std::function<bool(const std::vector<char>&)>& sink) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> max_nbr(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    Vertex m = 0;
    for (Vertex w : g.neighbors(v)) m = std::max(m, w);
    max_nbr[v] = m;
  }
  std::vector<char> in(n, 0);
  std::vector<std::size_t> dom(n, 0);
  bool stop = false;

  // returns false if the partial assignment is already doomed
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (stop) return;
    if (v == n) {
      if (!sink(in)) stop = true;
      return;
    }
    bool is_exempt = exempt && *exempt == v;
    // v outside the set
    {
      bool ok = true;
      if (!is_exempt) {
        if (dom[v] > 2) ok = false;
        if (ok && dom[v] == 0 && (g.degree(v) == 0 || max_nbr[v] < v))
          ok = false;  // no dominator can still appear
      } else if (dom[v] > 2) {
        ok = false;  // the exempt vertex still carries at most 2 neighbours in S
      }
      if (ok) {
        for (Vertex w : g.neighbors(v)) {
          if (w >= v) break;  // sorted adjacency
          if (!in[w] && dom[w] == 0 && max_nbr[w] == v && !(exempt && *exempt == w)) {
            ok = false;  // w lost its last chance of domination
            break;
          }
        }
      }
      if (ok) self(self, v + 1);
      if (stop) return;
    }
    // v in the set
    {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (w >= v) break;
        if (in[w]) {
          ok = false;
          break;
        }
        if (!in[w] && dom[w] == 2 && !(exempt && *exempt == w)) {
          ok = false;  // w would be dominated three times
          break;
        }
        if (exempt && *exempt == w && dom[w] == 2) {
          ok = false;  // labels never exceed 2 neighbours for the exempt vertex
          break;
        }
      }
      if (ok) {
        in[v] = 1;
        for (Vertex w : g.neighbors(v)) ++dom[w];
        self(self, v + 1);
        for (Vertex w : g.neighbors(v)) --dom[w];
        in[v] = 0;
      }
    }
  };
  rec(rec, 0);
}

void check_cap(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap)
    throw Error(ErrorCode::cap_exceeded,
                "graph has " + std::to_string(g.vertex_count()) +
                    " vertices, oracle cap is " + std::to_string(cap));
}

}  // namespace

bool oracle_decide(const Graph& g, std::size_t cap) {
  check_cap(g, cap);
  bool found = false;
  enumerate_sets(g, std::nullopt, [&](const std::vector<char>&) {
    found = true;
    return false;  // stop
  });
  return found;
}

std::optional<std::size_t> oracle_min(const Graph& g, std::size_t cap) {
  check_cap(g, cap);
  std::optional<std::size_t> best;
  enumerate_sets(g, std::nullopt, [&](const std::vector<char>& in) {
    std::size_t sz = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
    if (!best || sz < *best) best = sz;
    return true;
  });
  return best;
}

std::vector<VertexSet> oracle_all_sets(const Graph& g, std::size_t cap) {
  check_cap(g, cap);
  std::vector<VertexSet> out;
  enumerate_sets(g, std::nullopt, [&](const std::vector<char>& in) {
    VertexSet s;
    for (Vertex v = 0; v < in.size(); ++v)
      if (in[v]) s.push_back(v);
    out.push_back(std::move(s));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, std::size_t> oracle_label_set(const RootedTree& t, Vertex v, std::size_t cap) {
  const std::size_t n = t.tree.vertex_count();
  if (v >= n) throw Error(ErrorCode::invalid_argument, "vertex out of range");
  // collect the subtree of v
  std::vector<Vertex> verts;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    verts.push_back(u);
    for (Vertex w : t.tree.neighbors(u))
      if (w != t.parent[u]) stack.push_back(w);
  }
  std::sort(verts.begin(), verts.end());
  if (verts.size() > cap)
    throw Error(ErrorCode::cap_exceeded, "subtree exceeds oracle cap");
  std::vector<Vertex> local(n, NO_VERTEX);
  for (Vertex i = 0; i < verts.size(); ++i) local[verts[i]] = i;
  Graph sub(verts.size());
  for (Vertex i = 0; i < verts.size(); ++i)
    for (Vertex w : t.tree.neighbors(verts[i]))
      if (local[w] != NO_VERTEX && i < local[w]) sub.add_edge(i, local[w]);
  Vertex r = local[v];

  std::map<int, std::size_t> out;
  enumerate_sets(sub, r, [&](const std::vector<char>& in) {
    int label;
    if (in[r]) {
      label = 0;
    } else {
      std::size_t c = 0;
      for (Vertex w : sub.neighbors(r)) c += in[w];
      if (c >= 1) {
        label = static_cast<int>(c);
      } else {
        // no neighbour in S: -1 if all neighbours dominated once, -2 if some twice
        bool twice = false;
        for (Vertex w : sub.neighbors(r)) {
          std::size_t d = 0;
          for (Vertex z : sub.neighbors(w)) d += in[z];
          if (d == 2) twice = true;
        }
        label = twice ? -2 : -1;
      }
    }
    std::size_t sz = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
    auto it = out.find(label);
    if (it == out.end() || sz < it->second) out[label] = sz;
    return true;
  });
  return out;
}

}  // namespace ind12
