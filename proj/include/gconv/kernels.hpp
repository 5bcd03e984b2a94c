#pragma once

// Kernels for "gp_p3(G) >= k" (equivalently: does G have a dissociation set of
// size k?), parameterized by neighborhood diversity + k and by vertex cover + k.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace gconv {

struct TwinClass {
  std::vector<Vertex> members;  // ascending
  bool clique = false;          // false: independent (singletons included)
};

/**
 * Canonical minimum twin partition: vertices with equal open neighborhoods form
 * independent classes; the rest are grouped by closed neighborhood into clique
 * classes. Classes are ordered by their smallest member.
 */
inline std::vector<TwinClass> twin_partition(const Graph& g) {
  const std::size_t n = g.order();
  auto key = [](const VertexSet& s) { return s.to_vector(); };

  std::map<std::vector<Vertex>, std::vector<Vertex>> by_open;
  for (Vertex v = 0; v < n; ++v) by_open[key(g.neighbors(v))].push_back(v);

  std::vector<std::optional<std::size_t>> class_of(n);
  std::vector<TwinClass> classes;
  for (auto& [_, members] : by_open)
    if (members.size() >= 2) {
      for (Vertex v : members) class_of[v] = classes.size();
      classes.push_back({members, false});
    }

  std::map<std::vector<Vertex>, std::vector<Vertex>> by_closed;
  for (Vertex v = 0; v < n; ++v)
    if (!class_of[v]) by_closed[key(g.closed_neighbors(v))].push_back(v);
  for (auto& [_, members] : by_closed) classes.push_back({members, members.size() >= 2});

  std::sort(classes.begin(), classes.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.members.front() < b.members.front(); });
  return classes;
}

struct KernelOutcome {
  std::optional<bool> decided;  // set when the kernel answers outright
  std::string reason;
  Graph reduced;                // meaningful when !decided
  std::vector<Vertex> origin;   // reduced vertex -> original vertex
  std::size_t k = 0;
  std::size_t bound = 0;        // size bound certified for `reduced`

  bool is_decided() const noexcept { return decided.has_value(); }
};

namespace detail {

inline KernelOutcome decide(bool answer, std::string reason, std::size_t k) {
  KernelOutcome out;
  out.decided = answer;
  out.reason = std::move(reason);
  out.k = k;
  return out;
}

// k <= 2 and k > n need no kernel: every set of at most two vertices is in
// general position.
inline std::optional<KernelOutcome> trivial_answer(const Graph& g, std::size_t k) {
  if (k > g.order()) return decide(false, "k exceeds the number of vertices", k);
  if (k <= 2) return decide(true, "any set of at most two vertices is in general position", k);
  return std::nullopt;
}

}  // namespace detail

/**
 * Neighborhood-diversity kernel. An independent twin class with >= k members
 * answers YES; otherwise every clique class keeps only its two lowest-indexed
 * vertices, leaving at most nd(G)*(k-1) vertices.
 */
inline KernelOutcome nd_kernel(const Graph& g, std::size_t k) {
  if (auto trivial = detail::trivial_answer(g, k)) return *trivial;
  const auto classes = twin_partition(g);
  for (const auto& c : classes)
    if (!c.clique && c.members.size() >= k)
      return detail::decide(true, "independent twin class of size " + std::to_string(c.members.size()), k);

  VertexSet keep(g.order());
  for (const auto& c : classes)
    for (std::size_t i = 0; i < c.members.size() && (!c.clique || i < 2); ++i) keep.insert(c.members[i]);

  auto sub = induced_subgraph(g, keep);
  KernelOutcome out;
  out.reason = "clique twin classes shrunk to two vertices";
  out.reduced = std::move(sub.graph);
  out.origin = std::move(sub.origin);
  out.k = k;
  out.bound = classes.size() * (k - 1);
  return out;
}

// Endpoints of a maximal matching built greedily over edges in lexicographic
// order; at most twice the minimum vertex cover.
inline VertexSet vertex_cover_2approx(const Graph& g) {
  VertexSet cover(g.order());
  for (auto [a, b] : g.edges())
    if (!cover.contains(a) && !cover.contains(b)) {
      cover.insert(a);
      cover.insert(b);
    }
  return cover;
}

/**
 * Vertex-cover kernel. With S the 2-approximate cover, |V \ S| >= k answers
 * YES (an independent set is in general position); otherwise G itself is the
 * kernel, with |V| <= |S| + k - 1 <= 2 vc(G) + k - 1.
 */
inline KernelOutcome vc_kernel(const Graph& g, std::size_t k) {
  if (k == 0) throw usage_error("vc_kernel: k must be positive");
  if (k > g.order()) return detail::decide(false, "k exceeds the number of vertices", k);
  const VertexSet cover = vertex_cover_2approx(g);
  const std::size_t outside = g.order() - cover.size();
  if (outside >= k)
    return detail::decide(true, std::to_string(outside) + " vertices outside the cover form an independent set", k);
  KernelOutcome out;
  out.reason = "cover of size " + std::to_string(cover.size()) + " leaves " + std::to_string(outside) +
               " vertices outside";
  out.reduced = g;
  for (Vertex v = 0; v < g.order(); ++v) out.origin.push_back(v);
  out.k = k;
  out.bound = cover.size() + k - 1;
  return out;
}

}  // namespace gconv
