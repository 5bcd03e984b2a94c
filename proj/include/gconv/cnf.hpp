#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph_io.hpp"
#include "random.hpp"

namespace gconv {

struct Literal {
  std::size_t variable = 0;  // 0-based
  bool positive = true;

  bool complements(const Literal& o) const { return variable == o.variable && positive != o.positive; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

// 3-CNF formula; every clause has exactly three literals.
struct CnfFormula {
  std::size_t variables = 0;
  std::vector<Clause> clauses;
};

using Assignment = std::vector<bool>;

inline bool satisfies(const Clause& c, const Assignment& a) {
  for (const auto& lit : c)
    if (a.at(lit.variable) == lit.positive) return true;
  return false;
}

inline bool satisfies(const CnfFormula& f, const Assignment& a) {
  for (const auto& c : f.clauses)
    if (!satisfies(c, a)) return false;
  return true;
}

/**
 * DIMACS CNF: "c" comment lines, a "p cnf <vars> <clauses>" header, then
 * signed 1-based literals with each clause terminated by 0. Clauses may span
 * lines. A "%" line ends the clause section (SATLIB convention).
 */
inline CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  std::size_t lineno = 0, declared = 0;
  bool have_header = false;
  std::vector<Literal> pending;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = detail::trim(line);
    if (body.empty() || body.front() == 'c') continue;
    if (body.front() == '%') break;
    auto tok = detail::split_ws(body);
    if (body.front() == 'p') {
      if (have_header) throw parse_error(lineno, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "cnf" || !detail::parse_int(tok[2], f.variables) ||
          !detail::parse_int(tok[3], declared))
        throw parse_error(lineno, "expected \"p cnf <variables> <clauses>\"");
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error(lineno, "clause before the \"p cnf\" header");
    for (auto t : tok) {
      long long value = 0;
      if (!detail::parse_int(t, value)) throw parse_error(lineno, "bad literal \"" + std::string(t) + "\"");
      if (value == 0) {
        if (pending.size() != 3)
          throw parse_error(lineno, "clause " + std::to_string(f.clauses.size() + 1) + " has " +
                                        std::to_string(pending.size()) + " literals; exactly 3 required");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(value < 0 ? -value : value);
      if (var > f.variables)
        throw parse_error(lineno, "variable " + std::to_string(var) + " exceeds declared count " +
                                      std::to_string(f.variables));
      pending.push_back({var - 1, value > 0});
    }
  }
  if (!have_header) throw parse_error(lineno, "missing \"p cnf\" header");
  if (!pending.empty()) throw parse_error(lineno, "last clause is not terminated by 0");
  if (f.clauses.size() != declared)
    throw parse_error(lineno, "header declares " + std::to_string(declared) + " clauses but " +
                                  std::to_string(f.clauses.size()) + " were given");
  if (f.clauses.empty()) throw parse_error(lineno, "formula has no clauses");
  return f;
}

inline CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

inline CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open " + path);
  return parse_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& lit : c) out << (lit.positive ? "" : "-") << lit.variable + 1 << ' ';
    out << "0\n";
  }
}

// Uniform random 3-CNF; each clause draws three distinct variables.
inline CnfFormula random_3cnf(std::size_t variables, std::size_t clauses, std::uint64_t seed) {
  if (variables < 3) throw usage_error("random_3cnf needs at least 3 variables");
  Rng rng(seed);
  CnfFormula f;
  f.variables = variables;
  for (std::size_t i = 0; i < clauses; ++i) {
    Clause c;
    for (std::size_t p = 0; p < 3; ++p) {
      std::size_t v;
      do {
        v = rng.below(variables);
      } while ((p > 0 && c[0].variable == v) || (p > 1 && c[1].variable == v));
      c[p] = {v, rng.chance(0.5)};
    }
    f.clauses.push_back(c);
  }
  return f;
}

// First satisfying assignment in binary counting order; exhaustive, so
// limited to 20 variables.
inline std::optional<Assignment> brute_force_satisfying_assignment(const CnfFormula& f) {
  if (f.variables > 20) throw infeasible_error("brute_force_satisfying_assignment", 20, f.variables);
  Assignment a(f.variables);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.variables); ++bits) {
    for (std::size_t v = 0; v < f.variables; ++v) a[v] = ((bits >> v) & 1U) != 0;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace gconv
