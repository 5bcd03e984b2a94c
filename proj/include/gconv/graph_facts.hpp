#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "graph.hpp"

namespace gconv {

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

using DistanceMatrix = std::vector<std::vector<std::size_t>>;

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), unreachable);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] == unreachable) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d;
  d.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

struct GraphFacts {
  bool is_bipartite = true;
  bool is_triangle_free = true;
  // nullopt when some pair of vertices is disconnected.
  std::optional<std::size_t> diameter;
  std::vector<std::size_t> degrees;
  std::size_t components = 0;
  DistanceMatrix distances;
};

inline GraphFacts graph_facts(const Graph& g) {
  const std::size_t n = g.order();
  GraphFacts f;
  f.distances = all_pairs_distances(g);
  f.degrees.resize(n);
  for (Vertex v = 0; v < n; ++v) f.degrees[v] = g.degree(v);

  // root[v]: lowest-indexed vertex of v's component.
  std::vector<Vertex> root(n, n);
  for (Vertex v = 0; v < n; ++v) {
    if (root[v] != n) continue;
    ++f.components;
    for (Vertex w = 0; w < n; ++w)
      if (f.distances[v][w] != unreachable) root[w] = v;
  }

  std::size_t diam = 0;
  bool connected = true;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (f.distances[u][v] == unreachable) connected = false;
      else diam = std::max(diam, f.distances[u][v]);
    }
  if (connected) f.diameter = diam;

  // An edge joining two vertices at equal BFS parity closes an odd cycle.
  for (auto [a, b] : g.edges())
    if (f.distances[root[a]][a] % 2 == f.distances[root[a]][b] % 2) {
      f.is_bipartite = false;
      break;
    }

  for (auto [a, b] : g.edges())
    if (g.neighbors(a).intersects(g.neighbors(b))) {
      f.is_triangle_free = false;
      break;
    }
  return f;
}

inline bool is_tree(const Graph& g) {
  if (g.order() == 0) return false;
  auto f = graph_facts(g);
  return f.components == 1 && g.edge_count() + 1 == g.order();
}

}  // namespace gconv
