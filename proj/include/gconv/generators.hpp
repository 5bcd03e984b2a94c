#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace gconv {

enum class Family { complete, cycle, path, wheel, star, random_tree, gnp, random_triangle_free };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::wheel: return "wheel";
    case Family::star: return "star";
    case Family::random_tree: return "random-tree";
    case Family::gnp: return "gnp";
    case Family::random_triangle_free: return "random-triangle-free";
  }
  return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
  for (auto f : {Family::complete, Family::cycle, Family::path, Family::wheel, Family::star,
                 Family::random_tree, Family::gnp, Family::random_triangle_free})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

struct GraphFamily {
  Family family = Family::complete;
  std::size_t n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
};

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw usage_error("cycle needs n >= 3, got " + std::to_string(n));
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

// Rim 0..n-2 is C_{n-1}; hub is n-1.
inline Graph wheel_graph(std::size_t n) {
  if (n < 4) throw usage_error("wheel needs n >= 4, got " + std::to_string(n));
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) {
    g.add_edge(v, (v + 1) % (n - 1));
    g.add_edge(v, n - 1);
  }
  return g;
}

// K_{1,n-1} with center 0.
inline Graph star_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

// Uniform labeled tree via a random Pruefer sequence.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  Graph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  Rng rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = rng.below(n);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.add_edge(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  Vertex a = n, b = n;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) (a == n ? a : b) = v;
  g.add_edge(a, b);
  return g;
}

// Each pair (u < v), scanned lexicographically, becomes an edge with probability p.
inline Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw usage_error("edge probability must lie in [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

// G(n,p) followed by triangle elimination: find the lexicographically first
// triangle a<b<c and delete its largest edge {b,c}; repeat until none remain.
inline Graph random_triangle_free(std::size_t n, double p, std::uint64_t seed) {
  Graph g = gnp_graph(n, p, seed);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = g.neighbors(a).next(a + 1); b < n; b = g.neighbors(a).next(b + 1)) {
      // Deleting {b,c} creates no triangle and leaves row a intact, so one
      // sweep equals restarting the scan after every deletion.
      for (Vertex c = g.neighbors(a).next(b + 1); c < n; c = g.neighbors(a).next(c + 1))
        if (g.has_edge(b, c)) g.remove_edge(b, c);
    }
  }
  return g;
}

inline Graph generate(const GraphFamily& f) {
  if (f.n < 1) throw usage_error(std::string(to_string(f.family)) + " needs n >= 1");
  switch (f.family) {
    case Family::complete: return complete_graph(f.n);
    case Family::cycle: return cycle_graph(f.n);
    case Family::path: return path_graph(f.n);
    case Family::wheel: return wheel_graph(f.n);
    case Family::star: return star_graph(f.n);
    case Family::random_tree: return random_tree(f.n, f.seed);
    case Family::gnp: return gnp_graph(f.n, f.p, f.seed);
    case Family::random_triangle_free: return random_triangle_free(f.n, f.p, f.seed);
  }
  throw usage_error("unknown family");
}

}  // namespace gconv
