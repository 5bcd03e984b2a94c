#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace gconv {

/**
 * Simple undirected graph on vertices 0..n-1 with dense adjacency rows.
 *
 * Vertices may carry optional string labels (gadget role names). Labels are
 * annotation only: equality compares vertex count and edges.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n, VertexSet(n)) {}

  std::size_t order() const noexcept { return adjacency_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& row : adjacency_) twice += row.size();
    return twice / 2;
  }

  // Idempotent; self-loops and out-of-range endpoints throw usage_error.
  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw usage_error("self-loop at vertex " + std::to_string(u));
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    adjacency_[u].erase(v);
    adjacency_[v].erase(u);
  }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return u < order() && adjacency_[u].contains(v);
  }
  const VertexSet& neighbors(Vertex v) const {
    check(v);
    return adjacency_[v];
  }
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v = adjacency_[u].next(u + 1); v < order(); v = adjacency_[u].next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  void set_label(Vertex v, std::string label) {
    check(v);
    if (labels_.size() < order()) labels_.resize(order());
    labels_[v] = std::move(label);
  }
  // Empty string when unlabeled.
  const std::string& label(Vertex v) const {
    static const std::string none;
    check(v);
    return v < labels_.size() ? labels_[v] : none;
  }
  std::optional<Vertex> find_label(const std::string& label) const {
    for (Vertex v = 0; v < labels_.size(); ++v)
      if (labels_[v] == label) return v;
    return std::nullopt;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  void check(Vertex v) const {
    if (v >= order())
      throw usage_error("vertex " + std::to_string(v) + " out of range [0," +
                        std::to_string(order()) + ")");
  }

  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
};

// Subgraph induced by `keep`, renumbered in ascending order of original index.
// origin[i] is the original index of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> origin;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.origin = keep.to_vector();
  std::vector<Vertex> index(g.order(), g.order());
  for (Vertex i = 0; i < out.origin.size(); ++i) index[out.origin[i]] = i;
  out.graph = Graph(out.origin.size());
  for (Vertex i = 0; i < out.origin.size(); ++i) {
    Vertex v = out.origin[i];
    for (Vertex w : g.neighbors(v))
      if (index[w] < g.order() && index[w] > i) out.graph.add_edge(i, index[w]);
    if (!g.label(v).empty()) out.graph.set_label(i, g.label(v));
  }
  return out;
}

}  // namespace gconv
