#pragma once

#include "graph.hpp"

namespace gconv {

// G plus a new vertex n (label "u") adjacent to every original vertex.
inline Graph add_universal_vertex(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n + 1);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (Vertex v = 0; v < n; ++v) {
    out.add_edge(v, n);
    if (!g.label(v).empty()) out.set_label(v, g.label(v));
  }
  out.set_label(n, "u");
  return out;
}

// H with N_H(x) and N_H(y) each completed to a clique, making x and y simplicial.
inline Graph simplicial_closure(const Graph& h, Vertex x, Vertex y) {
  if (x >= h.order() || y >= h.order()) throw usage_error("simplicial_closure: vertex out of range");
  if (x == y) throw usage_error("simplicial_closure: x and y must differ");
  Graph g = h;
  for (Vertex s : {x, y}) {
    const auto nbrs = h.neighbors(s).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) g.add_edge(nbrs[i], nbrs[j]);
  }
  return g;
}

}  // namespace gconv
