#pragma once

#include "graph.hpp"

// Shared graph builders for the unit tests.
namespace fixtures {

inline ind12::Graph path(std::size_t n) {
  ind12::Graph g(n);
  for (ind12::Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline ind12::Graph cycle(std::size_t n) {
  ind12::Graph g = path(n);
  g.add_edge(0, static_cast<ind12::Vertex>(n - 1));
  return g;
}

// centre 0, leaves 1..r
inline ind12::Graph star(std::size_t r) {
  ind12::Graph g(r + 1);
  for (ind12::Vertex v = 1; v <= r; ++v) g.add_edge(0, v);
  return g;
}

// centres 0 and 1, a leaves on 0, b leaves on 1
inline ind12::Graph double_star(std::size_t a, std::size_t b) {
  ind12::Graph g(a + b + 2);
  g.add_edge(0, 1);
  ind12::Vertex next = 2;
  for (std::size_t i = 0; i < a; ++i) g.add_edge(0, next++);
  for (std::size_t i = 0; i < b; ++i) g.add_edge(1, next++);
  return g;
}

}  // namespace fixtures
