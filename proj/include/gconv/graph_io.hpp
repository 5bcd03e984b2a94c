#pragma once

// Edge-list text format:
//
//   # optional comment lines anywhere
//   n m
//   u v        (m lines, 0-based endpoints)
//
// The serializer writes labels as comments ("# label 4 u"); the parser skips
// every comment, so labels do not survive a round trip.

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace gconv {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
bool parse_int(std::string_view tok, Int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0, seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto tok = detail::split_ws(body);
    if (tok.size() != 2) throw parse_error(lineno, "expected two integers, got \"" + std::string(body) + "\"");
    std::size_t a = 0, b = 0;
    if (!detail::parse_int(tok[0], a) || !detail::parse_int(tok[1], b))
      throw parse_error(lineno, "expected two nonnegative integers, got \"" + std::string(body) + "\"");
    if (!have_header) {
      n = a;
      m = b;
      g = Graph(n);
      have_header = true;
      continue;
    }
    if (seen == m) throw parse_error(lineno, "more than the " + std::to_string(m) + " edges declared in the header");
    if (a >= n || b >= n)
      throw parse_error(lineno, "vertex index " + std::to_string(a >= n ? a : b) + " out of range for n=" + std::to_string(n));
    if (a == b) throw parse_error(lineno, "self-loop at vertex " + std::to_string(a));
    g.add_edge(a, b);
    ++seen;
  }
  if (!have_header) throw parse_error(lineno, "missing \"n m\" header");
  if (seen != m)
    throw parse_error(lineno, "header declares " + std::to_string(m) + " edges but " + std::to_string(seen) + " were listed");
  return g;
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open " + path);
  return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.label(v).empty()) out << "# label " << v << ' ' << g.label(v) << '\n';
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace gconv
