#include "ind12.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "graph.hpp"
#include "oracle.hpp"
#include "spanning.hpp"
#include "structure.hpp"
#include "tree_dp.hpp"

struct ind12_graph {
  ind12::Graph g;
};

namespace {

thread_local std::string t_last_error;

int map_code(ind12::ErrorCode c) {
  switch (c) {
    case ind12::ErrorCode::parse: return IND12_EPARSE;
    case ind12::ErrorCode::invalid_argument: return IND12_EINVAL;
    case ind12::ErrorCode::not_a_tree: return IND12_ENOTTREE;
    case ind12::ErrorCode::not_connected: return IND12_ENOTCONN;
    case ind12::ErrorCode::not_a_cactus: return IND12_ENOTCACTUS;
    case ind12::ErrorCode::precondition: return IND12_EPRECOND;
    case ind12::ErrorCode::cap_exceeded: return IND12_ECAP;
    case ind12::ErrorCode::internal: return IND12_EINTERNAL;
  }
  return IND12_EINTERNAL;
}

template <typename F>
int guarded(F&& f) {
  t_last_error.clear();
  try {
    return f();
  } catch (const ind12::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return IND12_ENOMEM;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return IND12_EINTERNAL;
  }
}

int fail(int code, const char* msg) {
  t_last_error = msg;
  return code;
}

// malloc'd copy so callers can free() through ind12_string_free
int emit(const std::string& s, char** out) {
  if (!out) return IND12_OK;
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) return fail(IND12_ENOMEM, "out of memory");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
  return IND12_OK;
}

int emit_set(const ind12::VertexSet& s, uint32_t* buf, size_t cap, size_t* len) {
  if (!buf || !len) return fail(IND12_EINVAL, "null output buffer");
  if (s.size() > cap) return fail(IND12_EINVAL, "output buffer too small");
  for (size_t i = 0; i < s.size(); ++i) buf[i] = s[i];
  *len = s.size();
  return IND12_OK;
}

ind12::VertexSet to_set(const uint32_t* set, size_t set_len) {
  ind12::VertexSet s;
  s.reserve(set_len);
  for (size_t i = 0; i < set_len; ++i) s.push_back(set[i]);
  return s;
}

bool null_graph(const ind12_graph* g) { return g == nullptr; }

std::string classes_text(const ind12::SpanningCertificate& cert) {
  std::string text = "non-tree edges = " + std::to_string(cert.edge_classes.size()) + "\n";
  for (const auto& [e, cls] : cert.edge_classes) {
    text += std::to_string(e.first) + "-" + std::to_string(e.second) + " = ";
    if (cls.kind == ind12::EdgeClass::type_a)
      text += "type A";
    else
      text += "type B component " + std::to_string(cls.component);
    text += "\n";
  }
  return text;
}

}  // namespace

extern "C" {

const char* ind12_last_error(void) { return t_last_error.c_str(); }

void ind12_string_free(char* s) { std::free(s); }

int ind12_graph_parse(const char* text, ind12_graph** out) {
  return guarded([&]() -> int {
    if (!text || !out) return fail(IND12_EINVAL, "null argument");
    auto* h = new ind12_graph{ind12::parse_graph(text)};
    *out = h;
    return IND12_OK;
  });
}

int ind12_graph_from_edges(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                           ind12_graph** out) {
  return guarded([&]() -> int {
    if (!out || (edge_count > 0 && !endpoints)) return fail(IND12_EINVAL, "null argument");
    std::vector<ind12::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      uint32_t a = endpoints[2 * i], b = endpoints[2 * i + 1];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    auto* h = new ind12_graph{ind12::Graph::from_edges(n, edges)};
    *out = h;
    return IND12_OK;
  });
}

int ind12_graph_serialize(const ind12_graph* g, char** out) {
  return guarded([&]() -> int {
    if (null_graph(g) || !out) return fail(IND12_EINVAL, "null argument");
    return emit(ind12::serialize_graph(g->g), out);
  });
}

void ind12_graph_free(ind12_graph* g) { delete g; }

uint32_t ind12_graph_vertex_count(const ind12_graph* g) {
  return g ? static_cast<uint32_t>(g->g.vertex_count()) : 0;
}

size_t ind12_graph_edge_count(const ind12_graph* g) { return g ? g->g.edge_count() : 0; }

int ind12_graph_is_tree(const ind12_graph* g) { return g && g->g.is_tree() ? 1 : 0; }

int ind12_graph_is_connected(const ind12_graph* g) { return g && g->g.connected() ? 1 : 0; }

int ind12_graph_is_cactus(const ind12_graph* g) { return g && ind12::is_cactus(g->g) ? 1 : 0; }

int ind12_random_tree(uint32_t n, uint64_t seed, ind12_graph** out) {
  return guarded([&]() -> int {
    if (!out) return fail(IND12_EINVAL, "null argument");
    *out = new ind12_graph{ind12::random_tree(n, seed)};
    return IND12_OK;
  });
}

int ind12_random_cactus(uint32_t n, double cycle_bias, uint64_t seed, ind12_graph** out) {
  return guarded([&]() -> int {
    if (!out) return fail(IND12_EINVAL, "null argument");
    *out = new ind12_graph{ind12::random_cactus(n, cycle_bias, seed)};
    return IND12_OK;
  });
}

int ind12_check_set(const ind12_graph* g, const uint32_t* set, size_t set_len, char** report) {
  return guarded([&]() -> int {
    if (null_graph(g) || (set_len > 0 && !set)) return fail(IND12_EINVAL, "null argument");
    ind12::ValidationReport rep = ind12::validate_set(g->g, to_set(set, set_len));
    int rc = emit(ind12::describe(rep), report);
    if (rc != IND12_OK) return rc;
    return rep.valid ? IND12_OK : IND12_NO;
  });
}

int ind12_tree_decide(const ind12_graph* g) {
  return guarded([&]() -> int {
    if (null_graph(g)) return fail(IND12_EINVAL, "null graph");
    return ind12::decide(g->g) ? IND12_OK : IND12_NO;
  });
}

int ind12_tree_min(const ind12_graph* g, uint32_t* min_size) {
  return ind12_tree_stats(g, min_size, nullptr);
}

int ind12_tree_stats(const ind12_graph* g, uint32_t* min_size, uint64_t* rule_applications) {
  return guarded([&]() -> int {
    if (null_graph(g)) return fail(IND12_EINVAL, "null graph");
    ind12::DecideStats st = ind12::decide_stats(g->g);
    if (rule_applications) *rule_applications = st.rule_applications;
    if (!st.feasible) return IND12_NO;
    if (min_size) *min_size = *st.min_size;
    return IND12_OK;
  });
}

int ind12_tree_witness(const ind12_graph* g, uint32_t* buf, size_t cap, size_t* len) {
  return guarded([&]() -> int {
    if (null_graph(g)) return fail(IND12_EINVAL, "null graph");
    auto w = ind12::min_witness(g->g);
    if (!w) return IND12_NO;
    return emit_set(*w, buf, cap, len);
  });
}

int ind12_tree_semiexcellent(const ind12_graph* g) {
  return guarded([&]() -> int {
    if (null_graph(g)) return fail(IND12_EINVAL, "null graph");
    return ind12::is_semiexcellent(g->g) ? IND12_OK : IND12_NO;
  });
}

int ind12_tree_witness_containing(const ind12_graph* g, uint32_t x, uint32_t* buf, size_t cap,
                                  size_t* len) {
  return guarded([&]() -> int {
    if (null_graph(g)) return fail(IND12_EINVAL, "null graph");
    return emit_set(ind12::witness_containing(g->g, x), buf, cap, len);
  });
}

int ind12_tree_decompose(const ind12_graph* g, char** out) {
  return guarded([&]() -> int {
    if (null_graph(g) || !out) return fail(IND12_EINVAL, "null argument");
    ind12::GeneratingFamily fam = ind12::generating_family(g->g);
    std::string text = "components = " + std::to_string(fam.components.size()) + "\n";
    for (size_t i = 0; i < fam.components.size(); ++i) {
      const auto& comp = fam.components[i];
      std::vector<char> in_y(g->g.vertex_count(), 0);
      for (ind12::Vertex v : comp.parts.y_side) in_y[v] = 1;
      text += "component " + std::to_string(i) + " =";
      for (ind12::Vertex v : comp.vertices)
        text += " " + std::to_string(v) + (in_y[v] ? "[y]" : "[x]");
      text += "\n";
    }
    text += "removed =";
    for (const auto& [a, b] : fam.removed_edges)
      text += " " + std::to_string(a) + "-" + std::to_string(b);
    text += "\n";
    return emit(text, out);
  });
}

int ind12_oracle_decide(const ind12_graph* g, uint32_t cap) {
  return guarded([&]() -> int {
    if (null_graph(g)) return fail(IND12_EINVAL, "null graph");
    return ind12::oracle_decide(g->g, cap ? cap : ind12::ORACLE_CAP) ? IND12_OK : IND12_NO;
  });
}

int ind12_oracle_min(const ind12_graph* g, uint32_t cap, uint32_t* min_size) {
  return guarded([&]() -> int {
    if (null_graph(g)) return fail(IND12_EINVAL, "null graph");
    auto m = ind12::oracle_min(g->g, cap ? cap : ind12::ORACLE_CAP);
    if (!m) return IND12_NO;
    if (min_size) *min_size = static_cast<uint32_t>(*m);
    return IND12_OK;
  });
}

int ind12_oracle_sets(const ind12_graph* g, uint32_t cap, char** out) {
  return guarded([&]() -> int {
    if (null_graph(g) || !out) return fail(IND12_EINVAL, "null argument");
    std::string text;
    for (const auto& s : ind12::oracle_all_sets(g->g, cap ? cap : ind12::ORACLE_CAP)) {
      for (size_t i = 0; i < s.size(); ++i) {
        if (i) text += ' ';
        text += std::to_string(s[i]);
      }
      text += '\n';
    }
    return emit(text, out);
  });
}

int ind12_spanning_verify(const ind12_graph* g, const ind12_graph* tree, const uint32_t* set,
                          size_t set_len, char** report) {
  return guarded([&]() -> int {
    if (null_graph(g) || null_graph(tree) || (set_len > 0 && !set))
      return fail(IND12_EINVAL, "null argument");
    std::string why;
    auto cert = ind12::verify_condition(g->g, tree->g, to_set(set, set_len), &why);
    if (!cert) {
      int rc = emit(why + "\n", report);
      return rc != IND12_OK ? rc : IND12_NO;
    }
    return emit("ok\n" + classes_text(*cert), report);
  });
}

int ind12_spanning_construct(const ind12_graph* g, const uint32_t* set, size_t set_len,
                             char** tree_text, char** report) {
  return guarded([&]() -> int {
    if (null_graph(g) || (set_len > 0 && !set)) return fail(IND12_EINVAL, "null argument");
    ind12::SpanningCertificate cert = ind12::construct_spanning_tree(g->g, to_set(set, set_len));
    int rc = emit(ind12::serialize_graph(cert.tree), tree_text);
    if (rc != IND12_OK) return rc;
    return emit(classes_text(cert), report);
  });
}

int ind12_cactus_decide(const ind12_graph* g, uint64_t budget) {
  return guarded([&]() -> int {
    if (null_graph(g)) return fail(IND12_EINVAL, "null graph");
    return ind12::cactus_decide(g->g, budget ? budget : 1000000) ? IND12_OK : IND12_NO;
  });
}

}  // extern "C"
