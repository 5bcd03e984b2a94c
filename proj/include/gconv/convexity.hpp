#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "graph_facts.hpp"

namespace gconv {

enum class ConvexityKind { geodesic, monophonic, p3, p3star };

inline constexpr std::array<ConvexityKind, 4> all_convexities = {
    ConvexityKind::geodesic, ConvexityKind::monophonic, ConvexityKind::p3, ConvexityKind::p3star};

inline std::string_view to_string(ConvexityKind k) {
  switch (k) {
    case ConvexityKind::geodesic: return "geodesic";
    case ConvexityKind::monophonic: return "monophonic";
    case ConvexityKind::p3: return "p3";
    case ConvexityKind::p3star: return "p3star";
  }
  return "?";
}

inline std::optional<ConvexityKind> convexity_from_string(std::string_view s) {
  for (auto k : all_convexities)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Induced (chordless) path search

namespace detail {

class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, Vertex x, Vertex y, Vertex z)
      : g_(g), y_(y), z_(z), on_path_(g.order()), forbidden_(g.order()) {
    path_.push_back(x);
    on_path_.insert(x);
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(forbidden_)) return path_;
    return std::nullopt;
  }

 private:
  // Vertices reachable from `start` through `allowed` (start need not be allowed).
  VertexSet reach(Vertex start, const VertexSet& allowed) const {
    VertexSet seen(g_.order());
    seen.insert(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next(g_.order());
      for (Vertex v : frontier) next |= g_.neighbors(v);
      next &= allowed;
      next -= seen;
      seen |= next;
      frontier = std::move(next);
    }
    return seen;
  }

  // `forbidden` is the union of N[p] over every path vertex except the last;
  // a new vertex must avoid it to keep the path chordless.
  bool extend(const VertexSet& forbidden) {
    const Vertex v = path_.back();
    VertexSet candidates = g_.neighbors(v) - forbidden;
    candidates -= on_path_;
    const VertexSet next_forbidden = forbidden | g_.closed_neighbors(v);
    const bool have_z = on_path_.contains(z_);

    for (Vertex w : candidates) {
      if (w == y_) {
        if (have_z) {
          path_.push_back(y_);
          return true;
        }
        continue;
      }
      // Once w is appended, v turns interior and y must avoid N[v].
      if (next_forbidden.contains(y_)) continue;
      VertexSet allowed = g_.all_vertices() - next_forbidden;
      const VertexSet reachable = reach(w, allowed);
      if (!reachable.contains(y_)) continue;
      if (!have_z && w != z_) {
        allowed.erase(y_);
        if (!reach(w, allowed).contains(z_)) continue;
      }
      path_.push_back(w);
      on_path_.insert(w);
      if (extend(next_forbidden)) return true;
      path_.pop_back();
      on_path_.erase(w);
    }
    return false;
  }

  const Graph& g_;
  Vertex y_, z_;
  std::vector<Vertex> path_;
  VertexSet on_path_;
  VertexSet forbidden_;
};

inline void require_distinct_triple(const Graph& g, Vertex x, Vertex y, Vertex z) {
  const std::size_t n = g.order();
  if (x >= n || y >= n || z >= n) throw usage_error("induced path query: vertex out of range");
  if (x == y || x == z || y == z) throw usage_error("induced path query: x, y, z must be pairwise distinct");
}

}  // namespace detail

// First chordless x-y path through z in depth-first ascending-neighbor order.
inline std::optional<std::vector<Vertex>> find_induced_path_through(const Graph& g, Vertex x, Vertex y,
                                                                    Vertex z) {
  detail::require_distinct_triple(g, x, y, z);
  return detail::InducedPathSearch(g, x, y, z).run();
}

inline bool exists_induced_path_through(const Graph& g, Vertex x, Vertex y, Vertex z) {
  return find_induced_path_through(g, x, y, z).has_value();
}

// ---------------------------------------------------------------------------
// Interval oracle

struct IterationTrace {
  VertexSet seed;
  // time[v] is nullopt ("never") for vertices outside the hull.
  std::vector<std::optional<std::size_t>> time;
  VertexSet hull;
  std::size_t steps = 0;
};

struct GeneralPositionResult {
  bool in_general_position = true;
  // (x, y, z) with z in I({x, y}); set only when the check fails.
  std::optional<std::array<Vertex, 3>> violation;

  explicit operator bool() const noexcept { return in_general_position; }
};

/**
 * Interval function of one convexity on one graph.
 *
 * Geodesic pair intervals come from an all-pairs distance table built at
 * construction. Monophonic pair intervals are computed on first use through
 * n-2 induced-path queries and memoized; the memo is mutex-guarded so a
 * shared oracle can be queried from several threads.
 *
 * The oracle keeps a reference to the graph, which must outlive it.
 */
class IntervalOracle {
 public:
  IntervalOracle(ConvexityKind kind, const Graph& g) : kind_(kind), g_(&g) {
    if (kind_ == ConvexityKind::geodesic) dist_ = all_pairs_distances(g);
    if (kind_ == ConvexityKind::monophonic) {
      memo_.resize(g.order() * g.order());
      memo_mutex_ = std::make_unique<std::mutex>();
    }
  }

  ConvexityKind kind() const noexcept { return kind_; }
  const Graph& graph() const noexcept { return *g_; }

  VertexSet pair_interval(Vertex x, Vertex y) const {
    const std::size_t n = g_->order();
    if (x >= n || y >= n) throw usage_error("pair_interval: vertex out of range");
    if (x == y) throw usage_error("pair_interval: x and y must differ");
    switch (kind_) {
      case ConvexityKind::geodesic: return geodesic_pair(x, y);
      case ConvexityKind::monophonic: return monophonic_pair(x, y);
      case ConvexityKind::p3: return common_neighbors_pair(x, y);
      case ConvexityKind::p3star:
        if (g_->has_edge(x, y)) return VertexSet(n, {x, y});
        return common_neighbors_pair(x, y);
    }
    throw usage_error("unknown convexity");
  }

  VertexSet interval(const VertexSet& s) const {
    check_set(s);
    const std::size_t n = g_->order();
    VertexSet out = s;
    switch (kind_) {
      case ConvexityKind::p3:
        for (Vertex z = 0; z < n; ++z)
          if (!s.contains(z) && g_->neighbors(z).intersection_size(s) >= 2) out.insert(z);
        return out;
      case ConvexityKind::p3star:
        for (Vertex z = 0; z < n; ++z) {
          if (s.contains(z)) continue;
          const VertexSet seen = g_->neighbors(z) & s;
          for (Vertex a : seen)
            if (!(seen - g_->closed_neighbors(a)).empty()) {
              out.insert(z);
              break;
            }
        }
        return out;
      case ConvexityKind::geodesic:
      case ConvexityKind::monophonic: {
        const auto members = s.to_vector();
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = i + 1; j < members.size(); ++j)
            out |= pair_interval(members[i], members[j]);
        return out;
      }
    }
    return out;
  }

  IterationTrace trace(const VertexSet& seed) const {
    check_set(seed);
    IterationTrace t;
    t.seed = seed;
    t.time.assign(g_->order(), std::nullopt);
    for (Vertex v : seed) t.time[v] = 0;
    VertexSet current = seed;
    while (true) {
      VertexSet next = interval(current);
      if (next == current) break;
      ++t.steps;
      for (Vertex v : next - current) t.time[v] = t.steps;
      current = std::move(next);
    }
    t.hull = std::move(current);
    return t;
  }

  VertexSet hull(const VertexSet& s) const { return trace(s).hull; }

  bool is_convex(const VertexSet& s) const { return interval(s) == s; }

  GeneralPositionResult general_position(const VertexSet& s) const {
    check_set(s);
    const auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Vertex x = members[i], y = members[j];
        VertexSet inside = pair_interval(x, y) & s;
        inside.erase(x);
        inside.erase(y);
        if (!inside.empty()) return {false, std::array<Vertex, 3>{x, y, inside.first()}};
      }
    return {};
  }

 private:
  void check_set(const VertexSet& s) const {
    if (s.universe() != g_->order())
      throw usage_error("vertex set over universe " + std::to_string(s.universe()) +
                        " does not match graph order " + std::to_string(g_->order()));
  }

  VertexSet common_neighbors_pair(Vertex x, Vertex y) const {
    VertexSet out = g_->neighbors(x) & g_->neighbors(y);
    out.insert(x);
    out.insert(y);
    return out;
  }

  VertexSet geodesic_pair(Vertex x, Vertex y) const {
    const std::size_t n = g_->order();
    VertexSet out(n, {x, y});
    const std::size_t dxy = dist_[x][y];
    if (dxy == unreachable) return out;
    for (Vertex z = 0; z < n; ++z)
      if (dist_[x][z] != unreachable && dist_[z][y] != unreachable && dist_[x][z] + dist_[z][y] == dxy)
        out.insert(z);
    return out;
  }

  VertexSet monophonic_pair(Vertex x, Vertex y) const {
    const std::size_t n = g_->order();
    const std::size_t key = x < y ? x * n + y : y * n + x;
    {
      std::lock_guard lock(*memo_mutex_);
      if (memo_[key]) return *memo_[key];
    }
    VertexSet out(n, {x, y});
    for (Vertex z = 0; z < n; ++z)
      if (z != x && z != y && exists_induced_path_through(*g_, x, y, z)) out.insert(z);
    std::lock_guard lock(*memo_mutex_);
    memo_[key] = out;
    return out;
  }

  ConvexityKind kind_;
  const Graph* g_;
  DistanceMatrix dist_;
  mutable std::vector<std::optional<VertexSet>> memo_;
  std::unique_ptr<std::mutex> memo_mutex_;
};

// One-shot wrappers; each builds a fresh oracle. Reuse an IntervalOracle when
// issuing many queries against the same graph.

inline VertexSet interval(ConvexityKind kind, const Graph& g, const VertexSet& s) {
  return IntervalOracle(kind, g).interval(s);
}

inline VertexSet pair_interval(ConvexityKind kind, const Graph& g, Vertex x, Vertex y) {
  return IntervalOracle(kind, g).pair_interval(x, y);
}

inline VertexSet hull(ConvexityKind kind, const Graph& g, const VertexSet& s) {
  return IntervalOracle(kind, g).hull(s);
}

inline IterationTrace iteration_trace(ConvexityKind kind, const Graph& g, const VertexSet& s) {
  return IntervalOracle(kind, g).trace(s);
}

inline bool is_convex(ConvexityKind kind, const Graph& g, const VertexSet& s) {
  return IntervalOracle(kind, g).is_convex(s);
}

inline GeneralPositionResult is_general_position(ConvexityKind kind, const Graph& g, const VertexSet& s) {
  return IntervalOracle(kind, g).general_position(s);
}

}  // namespace gconv
