#pragma once

// Brute-force reference implementations for tests. They only use Graph
// adjacency queries and never call the library's interval or solver code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "gconv/convexity.hpp"
#include "gconv/graph.hpp"

namespace oracle {

using gconv::ConvexityKind;
using gconv::Graph;
using gconv::Vertex;
using Set = std::vector<bool>;

inline Set empty(std::size_t n) { return Set(n, false); }

inline Set of(std::size_t n, std::initializer_list<Vertex> vs) {
  Set s(n, false);
  for (auto v : vs) s[v] = true;
  return s;
}

inline Set from_mask(std::size_t n, std::uint64_t mask) {
  Set s(n, false);
  for (std::size_t v = 0; v < n; ++v) s[v] = (mask >> v) & 1U;
  return s;
}

inline std::size_t count(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

inline gconv::VertexSet to_vertex_set(const Set& s) {
  gconv::VertexSet out(s.size());
  for (std::size_t v = 0; v < s.size(); ++v)
    if (s[v]) out.insert(v);
  return out;
}

// Every simple x-y path, as vertex sequences.
inline std::vector<std::vector<Vertex>> simple_paths(const Graph& g, Vertex x, Vertex y) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{x};
  std::vector<bool> used(g.order(), false);
  used[x] = true;
  std::function<void()> dfs = [&] {
    const Vertex v = path.back();
    if (v == y) {
      out.push_back(path);
      return;
    }
    for (Vertex w = 0; w < g.order(); ++w)
      if (g.has_edge(v, w) && !used[w]) {
        used[w] = true;
        path.push_back(w);
        dfs();
        path.pop_back();
        used[w] = false;
      }
  };
  dfs();
  return out;
}

inline bool is_induced(const Graph& g, const std::vector<Vertex>& path) {
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 2; j < path.size(); ++j)
      if (g.has_edge(path[i], path[j])) return false;
  return true;
}

// Vertices on some path of the convexity's path family between x and y.
inline Set pair_interval(ConvexityKind kind, const Graph& g, Vertex x, Vertex y) {
  const std::size_t n = g.order();
  Set out = of(n, {x, y});
  switch (kind) {
    case ConvexityKind::p3:
    case ConvexityKind::p3star:
      if (kind == ConvexityKind::p3star && g.has_edge(x, y)) break;
      for (Vertex z = 0; z < n; ++z)
        if (z != x && z != y && g.has_edge(x, z) && g.has_edge(z, y)) out[z] = true;
      break;
    case ConvexityKind::geodesic: {
      auto paths = simple_paths(g, x, y);
      std::size_t shortest = std::numeric_limits<std::size_t>::max();
      for (const auto& p : paths) shortest = std::min(shortest, p.size());
      for (const auto& p : paths)
        if (p.size() == shortest)
          for (Vertex v : p) out[v] = true;
      break;
    }
    case ConvexityKind::monophonic:
      for (const auto& p : simple_paths(g, x, y))
        if (is_induced(g, p))
          for (Vertex v : p) out[v] = true;
      break;
  }
  return out;
}

inline Set interval(ConvexityKind kind, const Graph& g, const Set& s) {
  Set out = s;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (s[x] && s[y]) {
        const Set p = oracle::pair_interval(kind, g, x, y);
        for (Vertex v = 0; v < g.order(); ++v) out[v] = out[v] || p[v];
      }
  return out;
}

// Iteration time of s (number of strict-growth steps) and its hull.
inline std::pair<std::size_t, Set> iterate(ConvexityKind kind, const Graph& g, Set s) {
  std::size_t steps = 0;
  while (true) {
    Set next = oracle::interval(kind, g, s);
    if (next == s) return {steps, s};
    s = std::move(next);
    ++steps;
  }
}

inline std::size_t iteration_time_graph(ConvexityKind kind, const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Set>> table(n, std::vector<Set>(n));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) table[x][y] = oracle::pair_interval(kind, g, x, y);
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Set s = from_mask(n, m);
    std::size_t steps = 0;
    while (true) {
      Set next = s;
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
          if (s[x] && s[y])
            for (Vertex v = 0; v < n; ++v) next[v] = next[v] || table[x][y][v];
      if (next == s) break;
      s = std::move(next);
      ++steps;
    }
    best = std::max(best, steps);
  }
  return best;
}

inline bool general_position(ConvexityKind kind, const Graph& g, const Set& s) {
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (!s[x] || !s[y]) continue;
      const Set p = oracle::pair_interval(kind, g, x, y);
      for (Vertex z = 0; z < g.order(); ++z)
        if (s[z] && z != x && z != y && p[z]) return false;
    }
  return true;
}

inline std::size_t gp_number(ConvexityKind kind, const Graph& g) {
  const std::size_t n = g.order();
  // between[x][y] = vertices strictly inside the pair interval of x and y.
  std::vector<std::vector<Set>> between(n, std::vector<Set>(n));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      between[x][y] = oracle::pair_interval(kind, g, x, y);
      between[x][y][x] = between[x][y][y] = false;
    }
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const Set s = from_mask(n, m);
    if (count(s) <= best) continue;
    bool ok = true;
    for (Vertex x = 0; x < n && ok; ++x)
      for (Vertex y = x + 1; y < n && ok; ++y)
        if (s[x] && s[y])
          for (Vertex z = 0; z < n && ok; ++z) ok = !(s[z] && between[x][y][z]);
    if (ok) best = count(s);
  }
  return best;
}

inline std::size_t max_induced_degree(const Graph& g, const Set& s) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s[v]) continue;
    std::size_t d = 0;
    for (Vertex w = 0; w < g.order(); ++w) d += s[w] && g.has_edge(v, w);
    best = std::max(best, d);
  }
  return best;
}

inline std::size_t dissociation_number(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    const Set s = from_mask(g.order(), m);
    if (count(s) > best && max_induced_degree(g, s) <= 1) best = count(s);
  }
  return best;
}

inline bool is_clique(const Graph& g, const Set& s) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (s[a] && s[b] && !g.has_edge(a, b)) return false;
  return true;
}

inline std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    const Set s = from_mask(g.order(), m);
    if (count(s) > best && is_clique(g, s)) best = count(s);
  }
  return best;
}

// Every component of G[s] is a clique: no induced P3 inside s.
inline bool is_union_of_cliques(const Graph& g, const Set& s) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < g.order(); ++b)
      for (Vertex c = b + 1; c < g.order(); ++c)
        if (s[a] && s[b] && s[c] && a != b && a != c && g.has_edge(a, b) && g.has_edge(a, c) && !g.has_edge(b, c))
          return false;
  return true;
}

}  // namespace oracle
