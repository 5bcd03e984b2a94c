// gconv: command-line front end for the graph convexity toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 infeasible (a solver
// cap was exceeded). `verify` exits 0 only when every check passes.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gconv/gconv.hpp"

namespace {

using namespace gconv;
using json = nlohmann::json;

enum Exit : int { ok = 0, usage = 1, parse = 2, infeasible = 3 };

struct RunResult {
  std::string command;
  std::string parameter;
  std::string convexity;
  std::optional<std::size_t> value;
  std::vector<Vertex> witness;
  double elapsed_ms = 0;
  std::string status = "ok";

  json to_json() const {
    return {{"command", command},
            {"parameter", parameter},
            {"convexity", convexity},
            {"value", value ? json(*value) : json(nullptr)},
            {"witness", witness},
            {"elapsed_ms", elapsed_ms},
            {"status", status}};
  }

  void print_text(std::ostream& os) const {
    std::string w;
    for (std::size_t i = 0; i < witness.size(); ++i) w += (i ? "," : "") + std::to_string(witness[i]);
    const std::pair<const char*, std::string> rows[] = {
        {"command", command},
        {"parameter", parameter},
        {"convexity", convexity},
        {"value", value ? std::to_string(*value) : "-"},
        {"witness", witness.empty() ? "{}" : "{" + w + "}"},
        {"elapsed_ms", [&] {
           std::ostringstream s;
           s << std::fixed << std::setprecision(3) << elapsed_ms;
           return s.str();
         }()},
        {"status", status}};
    for (const auto& [k, v] : rows) os << std::left << std::setw(12) << k << v << '\n';
  }
};

VertexSet parse_set_csv(const std::string& csv, std::size_t n) {
  VertexSet s(n);
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto tok = detail::trim(item);
    if (tok.empty()) continue;
    std::size_t v = 0;
    if (!detail::parse_int(tok, v)) throw usage_error("--set: \"" + std::string(tok) + "\" is not a vertex index");
    if (v >= n) throw usage_error("--set: vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    s.insert(v);
  }
  return s;
}

std::optional<std::size_t> env_cap() {
  if (const char* e = std::getenv("GCONV_CAP")) {
    std::size_t v = 0;
    if (!detail::parse_int(std::string_view(e), v)) throw usage_error("GCONV_CAP must be a nonnegative integer");
    return v;
  }
  return std::nullopt;
}

struct ComputeArgs {
  std::string param;
  std::string convexity;
  std::string graph;
  std::optional<std::string> set;
  std::optional<std::size_t> k;
  std::optional<std::size_t> cap;
  bool json = false;
};

int run_compute(const ComputeArgs& a, const std::string& echo) {
  RunResult out;
  out.command = echo;
  out.parameter = a.param;
  const auto started = std::chrono::steady_clock::now();
  auto finish = [&](int code) {
    out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    if (a.json) std::cout << out.to_json().dump() << '\n';
    else out.print_text(std::cout);
    return code;
  };

  try {
    const bool needs_kind = a.param != "diss" && a.param != "tree-ti";
    std::optional<ConvexityKind> kind;
    if (!a.convexity.empty()) {
      kind = convexity_from_string(a.convexity);
      if (!kind) throw usage_error("--convexity: unknown convexity \"" + a.convexity + "\"");
    }
    if (needs_kind && !kind) throw usage_error("--convexity is required for --param " + a.param);
    out.convexity = needs_kind ? std::string(to_string(*kind)) : "p3";

    SolverCaps caps;
    if (auto cap = a.cap ? a.cap : env_cap()) caps = SolverCaps::uniform(*cap);

    const Graph g = read_edge_list_file(a.graph);
    auto need_set = [&] {
      if (!a.set) throw usage_error("--set is required for --param " + a.param);
      return parse_set_csv(*a.set, g.order());
    };
    auto report = [&](const SolverReport& r) {
      out.value = r.value;
      out.witness = r.witness.to_vector();
    };
    auto report_set = [&](const VertexSet& s) {
      out.value = s.size();
      out.witness = s.to_vector();
    };

    if (a.param == "interval") {
      report_set(interval(*kind, g, need_set()));
    } else if (a.param == "hull") {
      report_set(hull(*kind, g, need_set()));
    } else if (a.param == "ti-set") {
      const auto t = iteration_trace(*kind, g, need_set());
      out.value = t.steps;
      out.witness = t.seed.to_vector();
    } else if (a.param == "ti-graph") {
      report(iteration_time_graph(*kind, g, caps));
    } else if (a.param == "gp") {
      report(gp_number(*kind, g, caps));
    } else if (a.param == "gp-decide") {
      if (!a.k) throw usage_error("--k is required for --param gp-decide");
      const auto d = gp_decision_xp(*kind, g, *a.k);
      out.value = d.found ? 1 : 0;
      out.witness = d.witness.to_vector();
    } else if (a.param == "diss") {
      report(dissociation_number(g, caps));
    } else if (a.param == "tree-ti") {
      out.value = tree_iteration_time_p3(g);
    } else {
      throw usage_error("--param: unknown parameter \"" + a.param + "\"");
    }
    return finish(Exit::ok);
  } catch (const infeasible_error& e) {
    std::cerr << "gconv: " << e.what() << " (raise with --cap or GCONV_CAP)\n";
    out.status = "infeasible";
    return finish(Exit::infeasible);
  } catch (const parse_error& e) {
    std::cerr << "gconv: " << a.graph << ": " << e.what() << '\n';
    out.status = "error";
    return finish(Exit::parse);
  } catch (const usage_error& e) {
    std::cerr << "gconv: " << e.what() << '\n';
    out.status = "error";
    return finish(Exit::usage);
  }
}

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string output;
  std::optional<std::string> colors;
  std::optional<std::size_t> x, y, k;
};

void write_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw usage_error("--output: cannot write " + path);
  write_edge_list(out, g);
}

int run_reduce(const ReduceArgs& a) {
  if (a.kind == "sat-ti") {
    const auto gadget = build_sat_iteration_gadget(read_dimacs_file(a.input));
    write_graph(a.output, gadget.graph);
    std::cout << "vertices " << gadget.graph.order() << "\ntarget " << gadget.target << '\n';
  } else if (a.kind == "clique-gp") {
    const auto gadget = build_monophonic_gp_gadget(read_edge_list_file(a.input), a.k);
    write_graph(a.output, gadget.graph);
    std::cout << "vertices " << gadget.graph.order() << '\n';
    if (a.k) std::cout << "target " << gadget.target << '\n';
    else std::cout << "target k+1 for clique size k (pass --k to fix it)\n";
  } else if (a.kind == "mcis-gp") {
    if (!a.colors) throw usage_error("reduce mcis-gp requires --colors");
    const auto inst = read_coloring_file(read_edge_list_file(a.input), *a.colors);
    const auto gadget = build_mcis_gp_gadget(inst);
    write_graph(a.output, gadget.graph);
    std::cout << "vertices " << gadget.graph.order() << "\ntarget " << gadget.target << '\n';
  } else if (a.kind == "simplicial") {
    if (!a.x || !a.y) throw usage_error("reduce simplicial requires --x and --y");
    const Graph g = simplicial_closure(read_edge_list_file(a.input), *a.x, *a.y);
    write_graph(a.output, g);
    std::cout << "vertices " << g.order() << "\nedges " << g.edge_count() << '\n';
  } else {
    throw usage_error("unknown reduction \"" + a.kind + "\"");
  }
  return Exit::ok;
}

int run_verify(const std::string& suite, const SuiteOptions& opt) {
  std::vector<std::string_view> names;
  if (suite == "all") names = suite_names();
  else names.push_back(suite);
  bool all_ok = true;
  for (auto name : names) {
    const auto r = run_suite(name, opt);
    print_report(std::cout, r);
    all_ok = all_ok && r.ok();
  }
  return all_ok ? Exit::ok : Exit::usage;
}

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
};

int run_generate(const GenerateArgs& a) {
  const auto family = family_from_string(a.family);
  if (!family) throw usage_error("--family: unknown family \"" + a.family + "\"");
  const Graph g = generate({*family, a.n, a.p, a.seed});
  if (a.output) write_graph(*a.output, g);
  else write_edge_list(std::cout, g);
  return Exit::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph convexity parameters, hardness gadgets and kernels"};
  app.require_subcommand(1);

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate an interval, hull or parameter on a graph");
  c->add_option("--param", compute.param, "interval|hull|ti-set|ti-graph|gp|gp-decide|diss|tree-ti")->required();
  c->add_option("--convexity", compute.convexity, "geodesic|monophonic|p3|p3star");
  c->add_option("--graph", compute.graph, "Edge-list file")->required();
  c->add_option("--set", compute.set, "Comma-separated vertex set (may be empty)")->expected(0, 1);
  c->add_option("--k", compute.k, "Size for gp-decide");
  c->add_option("--cap", compute.cap, "Exact-solver size cap (overrides GCONV_CAP and defaults)");
  c->add_flag("--json", compute.json, "Emit one JSON record");

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Build a reduction gadget");
  r->add_option("kind", reduce.kind, "sat-ti|clique-gp|mcis-gp|simplicial")->required();
  r->add_option("--input", reduce.input, "Input file (DIMACS CNF for sat-ti, edge list otherwise)")->required();
  r->add_option("--output", reduce.output, "Gadget edge-list output file")->required();
  r->add_option("--colors", reduce.colors, "Color file for mcis-gp");
  r->add_option("--x", reduce.x, "First simplicial vertex");
  r->add_option("--y", reduce.y, "Second simplicial vertex");
  r->add_option("--k", reduce.k, "Clique size for clique-gp (target becomes k+1)");

  std::string suite;
  SuiteOptions suite_opt;
  std::optional<std::size_t> trials;
  auto* v = app.add_subcommand("verify", "Run a randomized verification suite");
  v->add_option("--suite", suite, "axioms|lemmas|tree|lift|mono1|mono2|mcis|sat|kernels|xp|all")->required();
  v->add_option("--trials", trials, "Number of random trials (suite default if omitted)");
  v->add_option("--seed", suite_opt.seed, "Seed for instance generation");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a graph from a named family");
  g->add_option("--family", gen.family, "complete|cycle|path|wheel|star|random-tree|gnp|random-triangle-free")
      ->required();
  g->add_option("--n", gen.n, "Vertex count")->required();
  g->add_option("--p", gen.p, "Edge probability for random families");
  g->add_option("--seed", gen.seed, "Seed for random families");
  g->add_option("--output", gen.output, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Exit::usage;
  }

  try {
    if (*c) {
      if (c->count("--set") && !compute.set) compute.set = std::string();
      return run_compute(compute, echo);
    }
    if (*r) return run_reduce(reduce);
    if (*v) {
      suite_opt.trials = trials;
      return run_verify(suite, suite_opt);
    }
    if (*g) return run_generate(gen);
  } catch (const infeasible_error& e) {
    std::cerr << "gconv: " << e.what() << '\n';
    return Exit::infeasible;
  } catch (const parse_error& e) {
    std::cerr << "gconv: " << e.what() << '\n';
    return Exit::parse;
  } catch (const usage_error& e) {
    std::cerr << "gconv: " << e.what() << '\n';
    return Exit::usage;
  }
  return Exit::usage;
}
