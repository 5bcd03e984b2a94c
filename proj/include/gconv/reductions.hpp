#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "cnf.hpp"
#include "convexity.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph_facts.hpp"
#include "graph_io.hpp"
#include "parameters.hpp"
#include "transforms.hpp"

namespace gconv {

// A constructed instance: the graph (with role labels), its decision
// threshold, and role name -> vertex index.
struct GadgetOutput {
  Graph graph;
  std::size_t target = 0;
  std::map<std::string, Vertex> roles;

  Vertex vertex(const std::string& role) const {
    auto it = roles.find(role);
    if (it == roles.end()) throw usage_error("gadget has no role \"" + role + "\"");
    return it->second;
  }

  // Labels v with `name` and records the role.
  Vertex add_role(Vertex v, std::string name) {
    graph.set_label(v, name);
    roles.emplace(std::move(name), v);
    return v;
  }
};

// ---------------------------------------------------------------------------
// 3-SAT -> P3 iteration time

// Two literal occurrences (clause, position), one the negation of the other.
// Occurrences are 0-based; (clause_a, position_a) precedes (clause_b, position_b).
struct ComplementaryPair {
  std::size_t clause_a = 0, position_a = 0;
  std::size_t clause_b = 0, position_b = 0;
};

/**
 * Vertex layout, for m clauses and p complementary pairs:
 *
 *   6i .. 6i+5         c_i, c'_i, p'_i, l_{i,1}, l_{i,2}, l_{i,3}   (clause i)
 *   6m                 p''_1
 *   6m+1+2i, +1        w_i, w'_i
 *   8m+1+2t, +1        w_{..}, w'_{..} for pair t
 *   8m+2p+1, +2        z, z'
 *
 * Labels use 1-based clause and position numbers ("c'_2", "l_{1,3}",
 * "w_{1,2,1,3}").
 */
class SatIterationGadget : public GadgetOutput {
 public:
  explicit SatIterationGadget(CnfFormula f) : formula_(std::move(f)) {
    const std::size_t m = formula_.clauses.size();
    if (m == 0) throw usage_error("formula has no clauses");
    for (const auto& c : formula_.clauses)
      for (const auto& lit : c)
        if (lit.variable >= formula_.variables) throw usage_error("literal variable out of range");

    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t j = i; j < m; ++j)
          for (std::size_t b = (j == i ? a + 1 : 0); b < 3; ++b)
            if (formula_.clauses[i][a].complements(formula_.clauses[j][b])) pairs_.push_back({i, a, j, b});

    const std::size_t p = pairs_.size();
    graph = Graph(8 * m + 2 * p + 3);
    target = 2 * m;

    for (std::size_t i = 0; i < m; ++i) {
      const std::string k = std::to_string(i + 1);
      add_role(c(i), "c_" + k);
      add_role(c_prime(i), "c'_" + k);
      add_role(p_prime(i), "p'_" + k);
      for (std::size_t a = 0; a < 3; ++a) add_role(literal(i, a), "l_{" + k + "," + std::to_string(a + 1) + "}");
      add_role(w(i), "w_" + k);
      add_role(w_prime(i), "w'_" + k);

      graph.add_edge(p_prime(i), c_prime(i));
      graph.add_edge(c_prime(i), c(i));
      for (std::size_t a = 0; a < 3; ++a) {
        graph.add_edge(c(i), literal(i, a));
        graph.add_edge(w(i), literal(i, a));
        graph.add_edge(w_prime(i), literal(i, a));
      }
      if (i + 1 < m) graph.add_edge(c(i), c_prime(i + 1));
    }
    add_role(p_double_prime(), "p''_1");
    graph.add_edge(p_double_prime(), c_prime(0));

    for (std::size_t t = 0; t < p; ++t) {
      const auto& pr = pairs_[t];
      const std::string idx = std::to_string(pr.clause_a + 1) + "," + std::to_string(pr.clause_b + 1) + "," +
                              std::to_string(pr.position_a + 1) + "," + std::to_string(pr.position_b + 1);
      add_role(pair_w(t), "w_{" + idx + "}");
      add_role(pair_w_prime(t), "w'_{" + idx + "}");
      for (Vertex v : {pair_w(t), pair_w_prime(t)}) {
        graph.add_edge(v, literal(pr.clause_a, pr.position_a));
        graph.add_edge(v, literal(pr.clause_b, pr.position_b));
      }
    }

    add_role(z(), "z");
    add_role(z_prime(), "z'");
    for (Vertex v : w_set()) {
      graph.add_edge(z(), v);
      graph.add_edge(z_prime(), v);
    }
  }

  const CnfFormula& formula() const noexcept { return formula_; }
  const std::vector<ComplementaryPair>& complementary_pairs() const noexcept { return pairs_; }
  std::size_t clause_count() const noexcept { return formula_.clauses.size(); }

  // Clause indices are 0-based.
  Vertex c(std::size_t i) const { return 6 * i; }
  Vertex c_prime(std::size_t i) const { return 6 * i + 1; }
  Vertex p_prime(std::size_t i) const { return 6 * i + 2; }
  Vertex literal(std::size_t i, std::size_t a) const { return 6 * i + 3 + a; }
  Vertex p_double_prime() const { return 6 * clause_count(); }
  Vertex w(std::size_t i) const { return 6 * clause_count() + 1 + 2 * i; }
  Vertex w_prime(std::size_t i) const { return w(i) + 1; }
  Vertex pair_w(std::size_t t) const { return 8 * clause_count() + 1 + 2 * t; }
  Vertex pair_w_prime(std::size_t t) const { return pair_w(t) + 1; }
  Vertex z() const { return 8 * clause_count() + 2 * pairs_.size() + 1; }
  Vertex z_prime() const { return z() + 1; }

  // W: all w_i, w'_i and pair vertices.
  VertexSet w_set() const {
    VertexSet s(graph.order());
    for (Vertex v = w(0); v < z(); ++v) s.insert(v);
    return s;
  }

 private:
  CnfFormula formula_;
  std::vector<ComplementaryPair> pairs_;
};

inline SatIterationGadget build_sat_iteration_gadget(const CnfFormula& f) { return SatIterationGadget(f); }

// Seed {l_{i,a_i}, p'_i : all i} u {p''_1}, where a_i is the lowest true
// literal position of clause i.
inline VertexSet sat_witness_seed(const SatIterationGadget& gadget, const Assignment& assignment) {
  const auto& f = gadget.formula();
  if (assignment.size() != f.variables)
    throw usage_error("assignment has " + std::to_string(assignment.size()) + " values for " +
                      std::to_string(f.variables) + " variables");
  VertexSet seed(gadget.graph.order());
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    std::optional<std::size_t> chosen;
    for (std::size_t a = 0; a < 3 && !chosen; ++a)
      if (assignment[f.clauses[i][a].variable] == f.clauses[i][a].positive) chosen = a;
    if (!chosen) throw usage_error("assignment leaves clause " + std::to_string(i + 1) + " false");
    seed.insert(gadget.literal(i, *chosen));
    seed.insert(gadget.p_prime(i));
  }
  seed.insert(gadget.p_double_prime());
  return seed;
}

struct SatForwardReport {
  bool passed = true;
  std::string failure;  // first violated assertion
  IterationTrace trace;

  explicit operator bool() const noexcept { return passed; }
};

// P3 trace from `seed`: time(c'_i) = 2i-1 and time(c_i) = 2i (1-based i),
// steps >= 2m, and no vertex of W u {z, z'} in the hull.
inline SatForwardReport verify_sat_seed(const SatIterationGadget& gadget, const VertexSet& seed) {
  SatForwardReport r;
  r.trace = iteration_trace(ConvexityKind::p3, gadget.graph, seed);
  const auto& time = r.trace.time;
  auto fail = [&](std::string why) {
    r.passed = false;
    r.failure = std::move(why);
    return r;
  };
  auto shown = [](const std::optional<std::size_t>& t) { return t ? std::to_string(*t) : std::string("never"); };

  const std::size_t m = gadget.clause_count();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = i + 1;
    if (time[gadget.c_prime(i)] != 2 * k - 1)
      return fail("time(c'_" + std::to_string(k) + ") = " + shown(time[gadget.c_prime(i)]) + ", expected " +
                  std::to_string(2 * k - 1));
    if (time[gadget.c(i)] != 2 * k)
      return fail("time(c_" + std::to_string(k) + ") = " + shown(time[gadget.c(i)]) + ", expected " +
                  std::to_string(2 * k));
  }
  if (r.trace.steps < 2 * m)
    return fail("steps = " + std::to_string(r.trace.steps) + " < 2m = " + std::to_string(2 * m));
  for (Vertex v : gadget.w_set())
    if (r.trace.hull.contains(v)) return fail(gadget.graph.label(v) + " is in the hull");
  for (Vertex v : {gadget.z(), gadget.z_prime()})
    if (r.trace.hull.contains(v)) return fail(gadget.graph.label(v) + " is in the hull");
  return r;
}

inline SatForwardReport verify_sat_forward(const SatIterationGadget& gadget, const Assignment& assignment) {
  return verify_sat_seed(gadget, sat_witness_seed(gadget, assignment));
}

// ---------------------------------------------------------------------------
// Clique -> monophonic general position

/**
 * H (vertices v_1..v_n at 0..n-1) plus u_i (at n+i-1) adjacent to every vertex
 * of H except v_i, plus u (at 2n) adjacent to every u_i. When a clique size k
 * is given, target = k + 1; otherwise target stays 0.
 */
inline GadgetOutput build_monophonic_gp_gadget(const Graph& h, std::optional<std::size_t> clique_size = {}) {
  const std::size_t n = h.order();
  if (n < 3) throw usage_error("clique gadget needs at least 3 vertices, got " + std::to_string(n));
  for (Vertex v = 0; v < n; ++v)
    if (h.degree(v) == 0) throw usage_error("clique gadget input has isolated vertex " + std::to_string(v));

  GadgetOutput out;
  out.graph = Graph(2 * n + 1);
  for (auto [a, b] : h.edges()) out.graph.add_edge(a, b);
  for (Vertex i = 0; i < n; ++i) {
    out.add_role(i, "v_" + std::to_string(i + 1));
    const Vertex ui = out.add_role(n + i, "u_" + std::to_string(i + 1));
    for (Vertex v = 0; v < n; ++v)
      if (v != i) out.graph.add_edge(ui, v);
    out.graph.add_edge(ui, 2 * n);
  }
  out.add_role(2 * n, "u");
  out.target = clique_size ? *clique_size + 1 : 0;
  return out;
}

// ---------------------------------------------------------------------------
// Multicolored independent set -> P3 general position

struct MulticoloredInstance {
  Graph graph;
  std::vector<std::size_t> color;  // color[v] in [1, k]
  std::size_t k = 0;

  void validate() const {
    if (color.size() != graph.order())
      throw usage_error("coloring covers " + std::to_string(color.size()) + " of " +
                        std::to_string(graph.order()) + " vertices");
    if (k == 0) throw usage_error("instance needs k >= 1");
    std::vector<std::size_t> count(k + 1, 0);
    for (Vertex v = 0; v < color.size(); ++v) {
      if (color[v] < 1 || color[v] > k)
        throw usage_error("vertex " + std::to_string(v) + " has color " + std::to_string(color[v]) +
                          " outside [1," + std::to_string(k) + "]");
      ++count[color[v]];
    }
    for (std::size_t c = 1; c <= k; ++c)
      if (count[c] == 0) throw usage_error("color class " + std::to_string(c) + " is empty");
  }
};

// Color file: one "vertex color" pair per line, '#' comments; k is the
// largest color seen.
inline MulticoloredInstance read_coloring(Graph g, std::istream& in) {
  MulticoloredInstance inst;
  inst.color.assign(g.order(), 0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto tok = detail::split_ws(body);
    std::size_t v = 0, c = 0;
    if (tok.size() != 2 || !detail::parse_int(tok[0], v) || !detail::parse_int(tok[1], c))
      throw parse_error(lineno, "expected \"vertex color\"");
    if (v >= g.order()) throw parse_error(lineno, "vertex " + std::to_string(v) + " out of range");
    if (c == 0) throw parse_error(lineno, "colors are 1-based");
    if (inst.color[v] != 0) throw parse_error(lineno, "vertex " + std::to_string(v) + " colored twice");
    inst.color[v] = c;
    inst.k = std::max(inst.k, c);
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (inst.color[v] == 0) throw parse_error(lineno, "vertex " + std::to_string(v) + " has no color");
  inst.graph = std::move(g);
  inst.validate();
  return inst;
}

inline MulticoloredInstance read_coloring_file(Graph g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open " + path);
  return read_coloring(std::move(g), in);
}

/**
 * G' = G with every color class completed to a clique, plus u_i (at n+i-1)
 * adjacent to exactly class i. target = 2k.
 */
inline GadgetOutput build_mcis_gp_gadget(const MulticoloredInstance& inst) {
  inst.validate();
  const std::size_t n = inst.graph.order();
  GadgetOutput out;
  out.graph = Graph(n + inst.k);
  for (auto [a, b] : inst.graph.edges()) out.graph.add_edge(a, b);
  for (Vertex a = 0; a < n; ++a) {
    out.add_role(a, "v_" + std::to_string(a + 1));
    for (Vertex b = a + 1; b < n; ++b)
      if (inst.color[a] == inst.color[b]) out.graph.add_edge(a, b);
    out.graph.add_edge(a, n + inst.color[a] - 1);
  }
  for (std::size_t i = 1; i <= inst.k; ++i) out.add_role(n + i - 1, "u_" + std::to_string(i));
  out.target = 2 * inst.k;
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence harnesses: each evaluates both sides of a biconditional with
// independent routes and reports whether they agree.

struct EquivalenceReport {
  bool holds = false;
  std::string lhs;
  std::string rhs;

  explicit operator bool() const noexcept { return holds; }
};

// Caps for harness instances; the clique gadget on 7 vertices has 15.
inline SolverCaps verification_caps() {
  SolverCaps caps;
  caps.gp_monophonic = 15;
  return caps;
}

// Induced x-y path through z in H  <=>  {x,y,z} not in monophonic general
// position in the simplicial closure of H at x and y.
inline EquivalenceReport verify_mono1(const Graph& h, Vertex x, Vertex y, Vertex z) {
  const bool path = exists_induced_path_through(h, x, y, z);
  const Graph g = simplicial_closure(h, x, y);
  const bool not_gp = !is_general_position(ConvexityKind::monophonic, g, VertexSet(g.order(), {x, y, z}));
  return {path == not_gp, "induced path through z: " + std::string(path ? "yes" : "no"),
          "triple violates general position: " + std::string(not_gp ? "yes" : "no")};
}

// gp_monophonic(gadget(H)) = omega(H) + 1.
inline EquivalenceReport verify_mono2(const Graph& h, const SolverCaps& caps = verification_caps()) {
  const GadgetOutput gadget = build_monophonic_gp_gadget(h);
  const std::size_t gp = gp_number(ConvexityKind::monophonic, gadget.graph, caps).value;
  const std::size_t omega = clique_number(h);
  return {gp == omega + 1, "gp_mc(gadget) = " + std::to_string(gp), "omega(H) + 1 = " + std::to_string(omega + 1)};
}

// gp_p3(G') >= 2k  <=>  G has a multicolored k-independent set.
inline EquivalenceReport verify_mcis(const MulticoloredInstance& inst) {
  const GadgetOutput gadget = build_mcis_gp_gadget(inst);
  const bool gp = gp_decision_xp(ConvexityKind::p3, gadget.graph, gadget.target).found;
  const bool mis = find_multicolored_independent_set(inst.graph, inst.color, inst.k).has_value();
  return {gp == mis, "gp_p3(G') >= " + std::to_string(gadget.target) + ": " + (gp ? "yes" : "no"),
          "multicolored independent set: " + std::string(mis ? "yes" : "no")};
}

// For triangle-free G with n >= 3 and G_u = G plus a universal vertex:
// ti_geodesic(G_u) = max(ti_p3(G), 1) and gp_geodesic(G_u) = max(gp_p3(G), omega(G) + 1).
inline EquivalenceReport verify_lift(const Graph& g, const SolverCaps& caps = verification_caps()) {
  if (g.order() < 3) throw usage_error("lift check needs at least 3 vertices");
  if (!graph_facts(g).is_triangle_free) throw usage_error("lift check needs a triangle-free graph");
  const Graph gu = add_universal_vertex(g);
  const std::size_t ti_gu = iteration_time_graph(ConvexityKind::geodesic, gu, caps).value;
  const std::size_t gp_gu = gp_number(ConvexityKind::geodesic, gu, caps).value;
  const std::size_t ti_g = iteration_time_graph(ConvexityKind::p3, g, caps).value;
  const std::size_t gp_g = gp_number(ConvexityKind::p3, g, caps).value;
  const std::size_t omega = clique_number(g);
  const std::size_t ti_expected = std::max<std::size_t>(ti_g, 1);
  const std::size_t gp_expected = std::max(gp_g, omega + 1);
  return {ti_gu == ti_expected && gp_gu == gp_expected,
          "ti_gc(G_u) = " + std::to_string(ti_gu) + ", gp_gc(G_u) = " + std::to_string(gp_gu),
          "max(ti_pc(G),1) = " + std::to_string(ti_expected) + ", max(gp_pc(G),omega+1) = " +
              std::to_string(gp_expected)};
}

}  // namespace gconv
