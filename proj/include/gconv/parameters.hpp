#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convexity.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_facts.hpp"

namespace gconv {

// Largest graph order each exact solver accepts. Exceeding a cap raises
// infeasible_error; nothing is silently truncated.
struct SolverCaps {
  std::size_t iteration_time = 16;
  std::size_t iteration_time_monophonic = 10;
  std::size_t gp = 16;
  std::size_t gp_monophonic = 12;
  std::size_t dissociation = 24;

  std::size_t iteration_time_cap(ConvexityKind k) const {
    return k == ConvexityKind::monophonic ? iteration_time_monophonic : iteration_time;
  }
  std::size_t gp_cap(ConvexityKind k) const {
    return k == ConvexityKind::monophonic ? gp_monophonic : gp;
  }

  // Every cap set to `cap`.
  static SolverCaps uniform(std::size_t cap) { return {cap, cap, cap, cap, cap}; }
};

struct SolverReport {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

namespace detail {

// Seed enumeration and bit-mask solvers address vertices through a 64-bit word.
inline void require_cap(const char* solver, std::size_t n, std::size_t cap) {
  if (n > cap || n >= 64) throw infeasible_error(solver, std::min<std::size_t>(cap, 63), n);
}

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/**
 * ti_C(G): maximum iteration time over all 2^n seeds.
 *
 * Seeds are visited in reflected Gray-code order (consecutive seeds differ in
 * one vertex); the witness is the first maximizer in that order.
 */
inline SolverReport iteration_time_graph(ConvexityKind kind, const Graph& g, const SolverCaps& caps = {}) {
  const std::size_t n = g.order();
  detail::require_cap("iteration_time_graph", n, caps.iteration_time_cap(kind));
  detail::Stopwatch clock;
  const IntervalOracle oracle(kind, g);
  SolverReport r;
  r.witness = VertexSet(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    auto t = oracle.trace(VertexSet::from_mask(n, gray));
    if (t.steps > r.value) {
      r.value = t.steps;
      r.witness = std::move(t.seed);
    }
  }
  r.explored = count;
  r.elapsed = clock.elapsed();
  return r;
}

/**
 * Violating triples of a convexity, stored per pair: third(a, b) holds every c
 * such that one of {a, b, c} lies in the interval of the other two. A set is in
 * general position iff it contains no triple {a, b, c} with c in third(a, b).
 */
class ConflictTriples {
 public:
  explicit ConflictTriples(const IntervalOracle& oracle) : n_(oracle.graph().order()) {
    third_.assign(n_ * n_, VertexSet(n_));
    for (Vertex x = 0; x < n_; ++x)
      for (Vertex y = x + 1; y < n_; ++y) {
        VertexSet inside = oracle.pair_interval(x, y);
        inside.erase(x);
        inside.erase(y);
        for (Vertex z : inside) {
          add(x, y, z);
          add(x, z, y);
          add(y, z, x);
        }
      }
  }

  const VertexSet& third(Vertex a, Vertex b) const { return third_[a * n_ + b]; }

 private:
  void add(Vertex a, Vertex b, Vertex c) {
    third_[a * n_ + b].insert(c);
    third_[b * n_ + a].insert(c);
  }

  std::size_t n_;
  std::vector<VertexSet> third_;
};

namespace detail {

// Maximum set hitting no conflict triple: include-first branching with the
// bound |chosen| + |candidates|. The first leaf is the greedy solution.
class GeneralPositionSearch {
 public:
  explicit GeneralPositionSearch(const ConflictTriples& triples, std::size_t n) : triples_(triples), n_(n) {}

  SolverReport run() {
    best_ = VertexSet(n_);
    VertexSet chosen(n_);
    search(chosen, VertexSet::full(n_));
    SolverReport r;
    r.value = best_.size();
    r.witness = best_;
    r.explored = explored_;
    return r;
  }

 private:
  void search(VertexSet& chosen, VertexSet candidates) {
    ++explored_;
    const std::size_t have = chosen.size();
    if (have > best_.size()) best_ = chosen;
    if (have + candidates.size() <= best_.size()) return;
    const Vertex v = candidates.first();
    candidates.erase(v);

    VertexSet with_v = candidates;
    for (Vertex c : chosen) with_v -= triples_.third(v, c);
    chosen.insert(v);
    search(chosen, std::move(with_v));
    chosen.erase(v);

    search(chosen, std::move(candidates));
  }

  const ConflictTriples& triples_;
  std::size_t n_;
  VertexSet best_;
  std::uint64_t explored_ = 0;
};

}  // namespace detail

// gp_C(G): size of a maximum general-position set, by branch and bound.
inline SolverReport gp_number(ConvexityKind kind, const Graph& g, const SolverCaps& caps = {}) {
  const std::size_t n = g.order();
  detail::require_cap("gp_number", n, caps.gp_cap(kind));
  detail::Stopwatch clock;
  const IntervalOracle oracle(kind, g);
  const ConflictTriples triples(oracle);
  SolverReport r = detail::GeneralPositionSearch(triples, n).run();
  r.elapsed = clock.elapsed();
  return r;
}

namespace detail {

/**
 * Maximum dissociation set (induced max degree <= 1).
 *
 * State: chosen set C and still-undecided set R. Propagation drops from R any
 * vertex that would push some degree in G[C] past one. Branching takes the
 * undecided vertex w of highest degree in G[C u R]: exclude w, or include it
 * together with at most one kept neighbor.
 */
class DissociationSearch {
 public:
  explicit DissociationSearch(const Graph& g) : n_(g.order()), adj_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).mask();
  }

  SolverReport run() {
    search(0, n_ == 0 ? 0 : (n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1));
    SolverReport r;
    r.value = static_cast<std::size_t>(std::popcount(best_));
    r.witness = VertexSet::from_mask(n_, best_);
    r.explored = explored_;
    return r;
  }

 private:
  static int count(std::uint64_t m) { return std::popcount(m); }

  void propagate(std::uint64_t chosen, std::uint64_t& rest) const {
    for (std::uint64_t c = chosen; c != 0; c &= c - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(c));
      if (adj_[v] & chosen) rest &= ~adj_[v];
    }
    for (std::uint64_t r = rest; r != 0; r &= r - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(r));
      if (count(adj_[v] & chosen) >= 2) rest &= ~(std::uint64_t{1} << v);
    }
  }

  void search(std::uint64_t chosen, std::uint64_t rest) {
    ++explored_;
    propagate(chosen, rest);
    const std::uint64_t live = chosen | rest;
    if (count(live) <= count(best_)) return;

    Vertex pick = n_;
    int pick_degree = 1;
    Vertex overloaded = n_;
    for (std::uint64_t m = live; m != 0; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      const int d = count(adj_[v] & live);
      if (d < 2) continue;
      if ((rest >> v) & 1U) {
        if (d > pick_degree) {
          pick = v;
          pick_degree = d;
        }
      } else if (overloaded == n_) {
        overloaded = v;
      }
    }
    if (pick == n_ && overloaded == n_) {
      best_ = live;
      return;
    }

    if (pick == n_) {
      // A chosen vertex with two or more undecided neighbors: decide one of them.
      const auto u = static_cast<Vertex>(std::countr_zero(adj_[overloaded] & rest));
      const std::uint64_t ubit = std::uint64_t{1} << u;
      search(chosen | ubit, rest & ~ubit);
      search(chosen, rest & ~ubit);
      return;
    }

    const std::uint64_t wbit = std::uint64_t{1} << pick;
    const std::uint64_t others = rest & ~wbit & ~adj_[pick];
    if (adj_[pick] & chosen) {
      search(chosen | wbit, others);
    } else {
      search(chosen | wbit, others);
      for (std::uint64_t m = adj_[pick] & rest; m != 0; m &= m - 1) {
        const auto u = static_cast<Vertex>(std::countr_zero(m));
        if (adj_[u] & chosen) continue;
        const std::uint64_t ubit = std::uint64_t{1} << u;
        search(chosen | wbit | ubit, others & ~adj_[u]);
      }
    }
    search(chosen, rest & ~wbit);
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace detail

// diss(G) = gp_p3(G), by dedicated branching.
inline SolverReport dissociation_number(const Graph& g, const SolverCaps& caps = {}) {
  detail::require_cap("dissociation_number", g.order(), caps.dissociation);
  detail::Stopwatch clock;
  SolverReport r = detail::DissociationSearch(g).run();
  r.elapsed = clock.elapsed();
  return r;
}

struct XpDecision {
  bool found = false;
  VertexSet witness;
  std::uint64_t explored = 0;

  explicit operator bool() const noexcept { return found; }
};

/**
 * Is there a k-subset in general position? Enumerates k-subsets in
 * lexicographic order, abandoning a prefix as soon as it contains a
 * violating triple. No size cap: cost is governed by C(n, k).
 */
inline XpDecision gp_decision_xp(ConvexityKind kind, const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  XpDecision d;
  d.witness = VertexSet(n);
  if (k > n) return d;
  const IntervalOracle oracle(kind, g);
  std::vector<Vertex> chosen;
  chosen.reserve(k);

  std::function<bool(Vertex)> extend = [&](Vertex from) -> bool {
    ++d.explored;
    if (chosen.size() == k) return true;
    for (Vertex v = from; v + (k - chosen.size()) <= n; ++v) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < chosen.size(); ++i) {
        const VertexSet with_v = oracle.pair_interval(chosen[i], v);
        for (std::size_t j = 0; j < chosen.size(); ++j)
          if (j != i && with_v.contains(chosen[j])) {
            ok = false;
            break;
          }
        for (std::size_t j = i + 1; ok && j < chosen.size(); ++j)
          if (oracle.pair_interval(chosen[i], chosen[j]).contains(v)) ok = false;
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (extend(v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  d.found = extend(0);
  if (d.found) d.witness = VertexSet::from_range(n, chosen);
  return d;
}

/**
 * P3 iteration time of a tree: the largest k such that some path v1..vk has
 * deg(vi) >= 3 for i < k and deg(vk) >= 2. All O(n^2) tree paths are checked.
 */
inline std::size_t tree_iteration_time_p3(const Graph& t) {
  const std::size_t n = t.order();
  if (n < 3 || !is_tree(t)) throw usage_error("tree_iteration_time_p3: input must be a tree with at least 3 vertices");
  std::size_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    // parent[] from a BFS rooted at s gives the unique s-t path for every t.
    std::vector<Vertex> parent(n, n);
    std::vector<Vertex> order{s};
    parent[s] = s;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Vertex w : t.neighbors(order[i]))
        if (parent[w] == n) {
          parent[w] = order[i];
          order.push_back(w);
        }
    for (Vertex end = 0; end < n; ++end) {
      if (t.degree(end) < 2) continue;
      std::size_t length = 1;
      bool ok = true;
      for (Vertex v = end; v != s; v = parent[v]) {
        if (t.degree(parent[v]) < 3) {
          ok = false;
          break;
        }
        ++length;
      }
      if (ok) best = std::max(best, length);
    }
  }
  return best;
}

enum class ClosedFormParameter { iteration_time, gp_monophonic };

/**
 * Known exact values for small families, used as independent test oracles:
 *  - K_n, n >= 4: ti_p3 = 1, ti_geodesic = ti_monophonic = 0
 *  - C_n, n >= 4: ti = 1 for p3, geodesic and monophonic
 *  - P_n, n >= 3 (trees): ti = 1 for p3, geodesic and monophonic
 *  - gp_monophonic: K_n -> n, C_n and P_n -> 2, W_4 -> 4, W_n -> 3 for n >= 5
 * Returns nullopt where no value is known.
 */
inline std::optional<std::size_t> closed_form(ConvexityKind kind, Family family, std::size_t n,
                                              ClosedFormParameter parameter) {
  using enum ConvexityKind;
  if (kind == p3star) return std::nullopt;
  if (parameter == ClosedFormParameter::iteration_time) {
    switch (family) {
      case Family::complete:
        if (n < 4) return std::nullopt;
        return kind == p3 ? 1 : 0;
      case Family::cycle:
        if (n < 4) return std::nullopt;
        return 1;
      case Family::path:
        if (n < 3) return std::nullopt;
        return 1;
      default: return std::nullopt;
    }
  }
  if (kind != monophonic || n < 4) return std::nullopt;
  switch (family) {
    case Family::complete: return n;
    case Family::cycle:
    case Family::path: return 2;
    case Family::wheel: return n == 4 ? 4 : 3;
    default: return std::nullopt;
  }
}

/**
 * Necessary condition for ti_p3(S) >= k: the subgraph H induced by the P3 hull
 * of S holds a path v1..vk outside S with v1 adjacent to two vertices of S,
 * deg_H(vi) >= 3 for i < k and deg_H(vk) >= 2.
 */
inline bool iteration_path_exists(const Graph& g, const VertexSet& s, std::size_t k) {
  if (k == 0) throw usage_error("iteration_path_exists: k must be positive");
  const IntervalOracle oracle(ConvexityKind::p3, g);
  const VertexSet h = oracle.hull(s);
  const VertexSet outside = h - s;
  auto deg_h = [&](Vertex v) { return g.neighbors(v).intersection_size(h); };

  VertexSet on_path(g.order());
  std::function<bool(Vertex, std::size_t)> walk = [&](Vertex v, std::size_t position) -> bool {
    if (position == k) return deg_h(v) >= 2;
    if (deg_h(v) < 3) return false;
    on_path.insert(v);
    for (Vertex w : g.neighbors(v) & outside)
      if (!on_path.contains(w) && walk(w, position + 1)) return true;
    on_path.erase(v);
    return false;
  };

  for (Vertex v : outside)
    if (g.neighbors(v).intersection_size(s) >= 2 && walk(v, 1)) return true;
  return false;
}

}  // namespace gconv
