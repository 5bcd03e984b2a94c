#pragma once

// Randomized verification suites. Each suite draws its instances from a seeded
// generator, so a (suite, trials, seed) triple always replays the same run.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brute_force.hpp"
#include "cnf.hpp"
#include "convexity.hpp"
#include "generators.hpp"
#include "graph_facts.hpp"
#include "graph_io.hpp"
#include "kernels.hpp"
#include "parameters.hpp"
#include "random.hpp"
#include "reductions.hpp"

namespace gconv {

struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool ok() const noexcept { return failed == 0; }

  void record(bool good, const std::function<std::string()>& describe) {
    if (good) {
      ++passed;
      return;
    }
    if (failed++ == 0) first_failure = describe();
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::chrono::milliseconds elapsed{0};

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

struct SuiteOptions {
  std::optional<std::size_t> trials;  // suite default when unset
  std::uint64_t seed = 1;
};

namespace suites {

inline std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "graph n=" << g.order() << " edges";
  for (auto [a, b] : g.edges()) os << ' ' << a << '-' << b;
  return os.str();
}

inline VertexSet random_subset(Rng& rng, std::size_t n, double p) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (rng.chance(p)) s.insert(v);
  return s;
}

inline Graph random_graph(Rng& rng, std::size_t lo, std::size_t hi) {
  const std::size_t n = rng.between(lo, hi);
  return gnp_graph(n, rng.unit(), rng.next());
}

// Blow-up of a random quotient graph: each part becomes a clique or an
// independent set, so the instance has nontrivial twin classes.
inline Graph random_blowup(Rng& rng, std::size_t max_n) {
  const std::size_t parts = rng.between(1, 4);
  std::vector<std::size_t> part_of;
  std::vector<bool> clique(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    clique[p] = rng.chance(0.5);
    const std::size_t size = rng.between(1, 5);
    for (std::size_t i = 0; i < size && part_of.size() < max_n; ++i) part_of.push_back(p);
  }
  std::vector<std::vector<bool>> joined(parts, std::vector<bool>(parts, false));
  for (std::size_t a = 0; a < parts; ++a)
    for (std::size_t b = a + 1; b < parts; ++b) joined[a][b] = joined[b][a] = rng.chance(0.5);
  Graph g(part_of.size());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto pu = part_of[u], pv = part_of[v];
      if (pu == pv ? clique[pu] : joined[pu][pv]) g.add_edge(u, v);
    }
  return g;
}

inline Graph random_graph_without_isolated(Rng& rng, std::size_t lo, std::size_t hi) {
  while (true) {
    Graph g = random_graph(rng, lo, hi);
    bool isolated = false;
    for (Vertex v = 0; v < g.order(); ++v) isolated = isolated || g.degree(v) == 0;
    if (!isolated) return g;
  }
}

inline bool is_complete(const Graph& g) { return 2 * g.edge_count() == g.order() * (g.order() - 1); }

// --- lemma value tables ----------------------------------------------------

inline SuiteReport lemmas(const SuiteOptions&) {
  using enum ConvexityKind;
  SuiteReport r{"lemmas", {}, {}};
  CheckResult ti{"ti of K_n and C_n matches the closed forms, 4 <= n <= 9"};
  CheckResult gp{"gp_mc of K_n, C_n, P_n, W_n matches the closed forms, 4 <= n <= 9"};
  const auto T = ClosedFormParameter::iteration_time;
  const auto GP = ClosedFormParameter::gp_monophonic;
  for (std::size_t n = 4; n <= 9; ++n) {
    for (auto [family, graph] : {std::pair{Family::complete, complete_graph(n)}, std::pair{Family::cycle, cycle_graph(n)}})
      for (auto kind : {p3, geodesic, monophonic}) {
        const auto expected = *closed_form(kind, family, n, T);
        const auto got = iteration_time_graph(kind, graph).value;
        ti.record(got == expected, [&] {
          return "ti_" + std::string(to_string(kind)) + "(" + std::string(to_string(family)) + " n=" +
                 std::to_string(n) + ") = " + std::to_string(got) + ", expected " + std::to_string(expected);
        });
      }
    for (auto [family, graph] : {std::pair{Family::complete, complete_graph(n)}, std::pair{Family::cycle, cycle_graph(n)},
                                 std::pair{Family::path, path_graph(n)}, std::pair{Family::wheel, wheel_graph(n)}}) {
      const auto expected = *closed_form(monophonic, family, n, GP);
      const auto got = gp_number(monophonic, graph).value;
      gp.record(got == expected, [&] {
        return "gp_mc(" + std::string(to_string(family)) + " n=" + std::to_string(n) + ") = " + std::to_string(got) +
               ", expected " + std::to_string(expected);
      });
    }
  }
  r.checks = {ti, gp};
  return r;
}

// --- closure-operator axioms ---------------------------------------------------

inline SuiteReport axioms(const SuiteOptions& opt) {
  SuiteReport r{"axioms", {}, {}};
  CheckResult ext{"hull extensivity"}, mono{"hull monotonicity"}, idem{"hull idempotence"},
      norm{"hull normalization"}, iext{"interval extensivity"}, imono{"interval monotonicity"};
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials.value_or(500);
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = random_graph(rng, 1, 10);
    const std::size_t n = g.order();
    const VertexSet s = random_subset(rng, n, rng.unit());
    const VertexSet s2 = s | random_subset(rng, n, rng.unit());
    for (auto kind : all_convexities) {
      const IntervalOracle oracle(kind, g);
      const VertexSet h = oracle.hull(s), h2 = oracle.hull(s2);
      auto where = [&] {
        std::ostringstream os;
        os << to_string(kind) << ' ' << describe(g) << " S=" << s << " S'=" << s2;
        return os.str();
      };
      ext.record(s.is_subset_of(h), where);
      mono.record(h.is_subset_of(h2), where);
      idem.record(oracle.hull(h) == h, where);
      norm.record(oracle.hull(VertexSet(n)).empty(), where);
      iext.record(s.is_subset_of(oracle.interval(s)), where);
      imono.record(oracle.interval(s).is_subset_of(oracle.interval(s2)), where);
    }
  }
  r.checks = {ext, mono, idem, norm, iext, imono};
  return r;
}

// --- tree formula ---------------------------------------------------------------

inline SuiteReport tree(const SuiteOptions& opt) {
  SuiteReport r{"tree", {}, {}};
  CheckResult eq{"tree path formula equals exhaustive ti_p3"};
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials.value_or(100);
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = random_tree(rng.between(3, 12), rng.next());
    const auto formula = tree_iteration_time_p3(g);
    const auto exact = iteration_time_graph(ConvexityKind::p3, g).value;
    eq.record(formula == exact, [&] {
      return describe(g) + ": formula " + std::to_string(formula) + ", exhaustive " + std::to_string(exact);
    });
  }
  r.checks = {eq};
  return r;
}

// --- universal-vertex lift --------------------------------------------------------

inline SuiteReport lift(const SuiteOptions& opt) {
  SuiteReport r{"lift", {}, {}};
  CheckResult eq{"ti and gp lift through a universal vertex (triangle-free G)"};
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials.value_or(200);
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = random_triangle_free(rng.between(3, 9), rng.unit(), rng.next());
    const auto rep = verify_lift(g);
    eq.record(rep.holds, [&] { return describe(g) + ": " + rep.lhs + " vs " + rep.rhs; });
  }
  r.checks = {eq};
  return r;
}

// --- monophonic reductions ----------------------------------------------------------

inline SuiteReport mono1(const SuiteOptions& opt) {
  SuiteReport r{"mono1", {}, {}};
  CheckResult eq{"induced path through z <=> triple not in general position after simplicial closure"};
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials.value_or(100);
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph h = random_graph(rng, 3, 8);
    const std::size_t n = h.order();
    const Vertex x = rng.below(n);
    Vertex y, z;
    do y = rng.below(n); while (y == x);
    do z = rng.below(n); while (z == x || z == y);
    const auto rep = verify_mono1(h, x, y, z);
    eq.record(rep.holds, [&] {
      return describe(h) + " (x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
             "): " + rep.lhs + " vs " + rep.rhs;
    });
  }
  r.checks = {eq};
  return r;
}

inline SuiteReport mono2(const SuiteOptions& opt) {
  SuiteReport r{"mono2", {}, {}};
  CheckResult eq{"gp_mc(clique gadget) = omega(H) + 1"};
  CheckResult non_complete{"gp_mc(clique gadget) = omega(H) + 1 restricted to non-complete H"};
  CheckResult complete{"complete H gives gp_mc(clique gadget) = n"};
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials.value_or(100);
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph h = random_graph_without_isolated(rng, 3, 7);
    const auto rep = verify_mono2(h);
    auto where = [&] { return describe(h) + ": " + rep.lhs + " vs " + rep.rhs; };
    eq.record(rep.holds, where);
    if (is_complete(h)) {
      const auto gp = gp_number(ConvexityKind::monophonic, build_monophonic_gp_gadget(h).graph, verification_caps());
      complete.record(gp.value == h.order(), where);
    } else {
      non_complete.record(rep.holds, where);
    }
  }
  r.checks = {eq, non_complete, complete};
  return r;
}

// --- multicolored independent set ------------------------------------------------------

inline MulticoloredInstance random_multicolored_instance(Rng& rng, std::size_t max_k, std::size_t max_n) {
  MulticoloredInstance inst;
  inst.k = rng.between(1, max_k);
  const std::size_t n = rng.between(inst.k, max_n);
  inst.graph = gnp_graph(n, rng.unit(), rng.next());
  inst.color.resize(n);
  for (Vertex v = 0; v < n; ++v) inst.color[v] = v < inst.k ? v + 1 : rng.between(1, inst.k);
  return inst;
}

inline SuiteReport mcis(const SuiteOptions& opt) {
  SuiteReport r{"mcis", {}, {}};
  CheckResult eq{"gp_p3(G') >= 2k <=> multicolored k-independent set"};
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials.value_or(100);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto inst = random_multicolored_instance(rng, 3, 9);
    const auto rep = verify_mcis(inst);
    eq.record(rep.holds, [&] { return describe(inst.graph) + " k=" + std::to_string(inst.k) + ": " + rep.lhs + " vs " + rep.rhs; });
  }
  r.checks = {eq};
  return r;
}

// --- SAT gadget ----------------------------------------------------------------------

// Structural audit: bipartite, vertex count 8m + 2p + 3, and role degrees.
inline std::optional<std::string> audit_sat_gadget(const SatIterationGadget& g) {
  const std::size_t m = g.clause_count(), p = g.complementary_pairs().size();
  if (!graph_facts(g.graph).is_bipartite) return "gadget is not bipartite";
  if (g.graph.order() != 8 * m + 2 * p + 3)
    return "order " + std::to_string(g.graph.order()) + " != 8m+2p+3 = " + std::to_string(8 * m + 2 * p + 3);
  const std::size_t w_count = g.w_set().size();
  if (w_count != 2 * m + 2 * p) return "|W| = " + std::to_string(w_count);
  if (g.graph.degree(g.vertex("z")) != w_count || g.graph.degree(g.vertex("z'")) != w_count)
    return "z or z' not adjacent to exactly W";
  if (g.graph.degree(g.vertex("p''_1")) != 1) return "p''_1 degree != 1";
  if (g.graph.degree(g.vertex("c'_1")) != 3) return "c'_1 degree != 3";
  for (std::size_t i = 0; i < m; ++i) {
    const std::string k = std::to_string(i + 1);
    if (g.graph.degree(g.vertex("p'_" + k)) != 1) return "p'_" + k + " degree != 1";
    if (g.graph.degree(g.vertex("w_" + k)) != 5) return "w_" + k + " degree != 5";
    if (g.graph.degree(g.vertex("c'_" + k)) != 3) return "c'_" + k + " degree != 3";
    if (g.graph.degree(g.vertex("c_" + k)) != (i + 1 < m ? 5u : 4u)) return "c_" + k + " degree";
  }
  if (g.roles.size() != g.graph.order()) return "role map is not total";
  return std::nullopt;
}

inline SuiteReport sat(const SuiteOptions& opt) {
  SuiteReport r{"sat", {}, {}};
  CheckResult forward{"satisfiable formula, m <= 6: chain times 2i-1, 2i; steps >= 2m; W, z, z' outside hull"};
  CheckResult small{"gadget structure, m <= 6"};
  CheckResult large{"gadget structure, 10 <= m <= 20"};
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials.value_or(30);
  for (std::size_t t = 0; t < trials; ++t) {
    while (true) {
      const auto f = random_3cnf(rng.between(3, 8), rng.between(1, 6), rng.next());
      const auto assignment = brute_force_satisfying_assignment(f);
      if (!assignment) continue;
      const auto gadget = build_sat_iteration_gadget(f);
      const auto rep = verify_sat_forward(gadget, *assignment);
      forward.record(rep.passed, [&] { return "m=" + std::to_string(f.clauses.size()) + ": " + rep.failure; });
      const auto audit = audit_sat_gadget(gadget);
      small.record(!audit, [&] { return *audit; });
      break;
    }
    const auto big = build_sat_iteration_gadget(random_3cnf(rng.between(3, 15), rng.between(10, 20), rng.next()));
    const auto audit = audit_sat_gadget(big);
    large.record(!audit, [&] { return *audit; });
  }
  r.checks = {forward, small, large};
  return r;
}

// --- kernels --------------------------------------------------------------------------

inline SuiteReport kernels(const SuiteOptions& opt) {
  SuiteReport r{"kernels", {}, {}};
  CheckResult nd_answer{"nd kernel preserves the answer"}, nd_size{"nd kernel size <= classes*(k-1)"};
  CheckResult vc_answer{"vc kernel preserves the answer"}, vc_size{"vc kernel size <= |S|+k-1"};
  CheckResult twins{"twin classes are uniform"};
  CheckResult cover{"2-approximate cover is valid and <= 2*vc(G), n <= 14"};
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials.value_or(200);
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = (t % 2 == 0) ? random_graph(rng, 1, 12) : random_blowup(rng, 12);
    const std::size_t k = rng.between(3, 5);
    const bool truth = gp_decision_xp(ConvexityKind::p3, g, k).found;
    auto where = [&] { return describe(g) + " k=" + std::to_string(k); };

    const auto nd = nd_kernel(g, k);
    const auto classes = twin_partition(g);
    if (nd.is_decided()) {
      nd_answer.record(*nd.decided == truth, where);
    } else {
      nd_answer.record(gp_decision_xp(ConvexityKind::p3, nd.reduced, k).found == truth, where);
      nd_size.record(nd.reduced.order() <= classes.size() * (k - 1), where);
    }

    const auto vc = vc_kernel(g, k);
    if (vc.is_decided()) {
      vc_answer.record(*vc.decided == truth, where);
    } else {
      vc_answer.record(gp_decision_xp(ConvexityKind::p3, vc.reduced, k).found == truth, where);
      vc_size.record(vc.reduced.order() <= vertex_cover_2approx(g).size() + k - 1, where);
    }

    bool uniform = true;
    for (std::size_t a = 0; a < classes.size(); ++a) {
      const auto& ca = classes[a].members;
      for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = i + 1; j < ca.size(); ++j)
          if (g.has_edge(ca[i], ca[j]) != classes[a].clique) uniform = false;
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        const bool joined = g.has_edge(ca.front(), classes[b].members.front());
        for (Vertex u : ca)
          for (Vertex v : classes[b].members)
            if (g.has_edge(u, v) != joined) uniform = false;
      }
    }
    twins.record(uniform, where);

    const Graph h = random_graph(rng, 1, 14);
    const VertexSet s = vertex_cover_2approx(h);
    bool valid = true;
    for (auto [a, b] : h.edges()) valid = valid && (s.contains(a) || s.contains(b));
    const std::size_t exact = minimum_vertex_cover_size(h);
    cover.record(valid && s.size() <= 2 * exact, [&] { return describe(h); });
  }
  r.checks = {nd_answer, nd_size, vc_answer, vc_size, twins, cover};
  return r;
}

// --- XP decision ----------------------------------------------------------------------

inline SuiteReport xp(const SuiteOptions& opt) {
  SuiteReport r{"xp", {}, {}};
  CheckResult eq{"gp_decision_xp(k) <=> k <= gp_number, every kind, n <= 8"};
  CheckResult wit{"gp_number witness is in general position and maximum"};
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials.value_or(40);
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = random_graph(rng, 1, 8);
    for (auto kind : all_convexities) {
      const auto best = gp_number(kind, g);
      wit.record(best.witness.size() == best.value && is_general_position(kind, g, best.witness).in_general_position &&
                     !gp_decision_xp(kind, g, best.value + 1).found,
                 [&] { return std::string(to_string(kind)) + " " + describe(g); });
      for (std::size_t k = 0; k <= g.order() + 1; ++k) {
        const auto d = gp_decision_xp(kind, g, k);
        eq.record(d.found == (k <= best.value), [&] {
          return std::string(to_string(kind)) + " " + describe(g) + " k=" + std::to_string(k) +
                 ": xp " + (d.found ? "yes" : "no") + ", gp " + std::to_string(best.value);
        });
      }
    }
  }
  r.checks = {eq, wit};
  return r;
}

}  // namespace suites

inline const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {"axioms", "lemmas", "tree", "lift", "mono1",
                                                      "mono2",  "mcis",   "sat",  "kernels", "xp"};
  return names;
}

// Runs one named suite; "all" is handled by the caller. Throws usage_error
// for unknown names.
inline SuiteReport run_suite(std::string_view name, const SuiteOptions& opt = {}) {
  using Fn = SuiteReport (*)(const SuiteOptions&);
  static const std::vector<std::pair<std::string_view, Fn>> table = {
      {"axioms", suites::axioms}, {"lemmas", suites::lemmas}, {"tree", suites::tree},
      {"lift", suites::lift},     {"mono1", suites::mono1},   {"mono2", suites::mono2},
      {"mcis", suites::mcis},     {"sat", suites::sat},       {"kernels", suites::kernels},
      {"xp", suites::xp}};
  for (auto [n, fn] : table)
    if (n == name) {
      const auto start = std::chrono::steady_clock::now();
      SuiteReport r = fn(opt);
      r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      return r;
    }
  throw usage_error("unknown suite \"" + std::string(name) + "\"");
}

inline void print_report(std::ostream& os, const SuiteReport& r) {
  os << "suite " << r.suite << " (" << r.elapsed.count() << " ms): " << (r.ok() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.checks) {
    os << "  [" << (c.ok() ? "pass" : "FAIL") << "] " << c.name << ": " << c.passed << " passed, " << c.failed
       << " failed\n";
    if (!c.ok()) os << "         first failure: " << c.first_failure << '\n';
  }
}

}  // namespace gconv
