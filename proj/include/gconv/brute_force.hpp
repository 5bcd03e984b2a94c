#pragma once

// Exhaustive reference computations used by the verification harnesses.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace gconv {

// omega(G) by recursive clique extension over ascending vertices.
inline std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  std::vector<Vertex> clique;
  auto grow = [&](auto&& self, VertexSet candidates) -> void {
    best = std::max(best, clique.size());
    if (clique.size() + candidates.size() <= best) return;
    for (Vertex v : candidates) {
      VertexSet next = candidates & g.neighbors(v);
      // Keep only vertices after v so each clique is built once.
      for (Vertex w : next)
        if (w < v) next.erase(w);
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    }
  };
  grow(grow, g.all_vertices());
  return best;
}

// Minimum vertex cover size over all 2^n subsets.
inline std::size_t minimum_vertex_cover_size(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 24) throw infeasible_error("minimum_vertex_cover_size", 24, n);
  const auto edges = g.edges();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool covers = true;
    for (auto [a, b] : edges)
      if (!((mask >> a) & 1U) && !((mask >> b) & 1U)) {
        covers = false;
        break;
      }
    if (covers) best = size;
  }
  return best;
}

// An independent set with exactly one vertex of each color 1..k, if any.
// color[v] is in [1, k].
inline std::optional<std::vector<Vertex>> find_multicolored_independent_set(const Graph& g,
                                                                            const std::vector<std::size_t>& color,
                                                                            std::size_t k) {
  std::vector<std::vector<Vertex>> classes(k + 1);
  for (Vertex v = 0; v < g.order(); ++v) classes.at(color.at(v)).push_back(v);
  std::vector<Vertex> picked;
  auto pick = [&](auto&& self, std::size_t c) -> bool {
    if (c > k) return true;
    for (Vertex v : classes[c]) {
      bool independent = true;
      for (Vertex p : picked)
        if (g.has_edge(p, v)) {
          independent = false;
          break;
        }
      if (!independent) continue;
      picked.push_back(v);
      if (self(self, c + 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  if (pick(pick, 1)) return picked;
  return std::nullopt;
}

}  // namespace gconv
