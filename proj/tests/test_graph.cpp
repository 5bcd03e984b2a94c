#include <gtest/gtest.h>

#include <sstream>

#include "gconv/gconv.hpp"
#include "oracles.hpp"

using namespace gconv;

namespace {

Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

// Number of vertices adjacent to every other vertex.
std::size_t universal_count(const Graph& g) {
  std::size_t c = 0;
  for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) + 1 == g.order();
  return c;
}

}  // namespace

// --- VertexSet -----------------------------------------------------------------------

TEST(VertexSet, InsertEraseAndIterate) {
  VertexSet s(70);
  s.insert(3);
  s.insert(64);
  s.insert(69);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(64));
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{3, 64, 69}));
  s.erase(64);
  EXPECT_FALSE(s.contains(64));
  EXPECT_EQ(s.first(), 3u);
  EXPECT_THROW(s.insert(70), usage_error);
}

TEST(VertexSet, AlgebraAndComplement) {
  const VertexSet a(6, {0, 1, 2}), b(6, {2, 3});
  EXPECT_EQ(a | b, VertexSet(6, {0, 1, 2, 3}));
  EXPECT_EQ(a & b, VertexSet(6, {2}));
  EXPECT_EQ(a - b, VertexSet(6, {0, 1}));
  EXPECT_EQ(a.complement(), VertexSet(6, {3, 4, 5}));
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_EQ(a.intersection_size(b), 1u);
  EXPECT_THROW(a | VertexSet(5), usage_error);
  std::ostringstream os;
  os << a;
  EXPECT_EQ(os.str(), "{0,1,2}");
}

// --- Graph ---------------------------------------------------------------------------

TEST(Graph, EdgesAreSymmetricAndSimple) {
  Graph g(4);
  g.add_edge(2, 0);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_THROW(g.add_edge(1, 1), usage_error);
  EXPECT_THROW(g.add_edge(1, 4), usage_error);
  g.add_edge(0, 2);
  EXPECT_EQ(g.edge_count(), 1u);
  g.remove_edge(0, 2);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Graph, InducedSubgraphKeepsOrigin) {
  const Graph c5 = cycle_graph(5);
  const auto sub = induced_subgraph(c5, VertexSet(5, {0, 1, 3}));
  EXPECT_EQ(sub.graph.order(), 3u);
  EXPECT_EQ(sub.origin, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(sub.graph.edge_count(), 1u);
}

// --- parse_edge_list ----------------------------------------------------------------

TEST(ParseEdgeList, PathOnThreeVertices) {
  const Graph g = parse_edge_list("3 2\n0 1\n1 2");
  EXPECT_EQ(g, path_graph(3));
}

TEST(ParseEdgeList, SingleVertex) {
  const Graph g = parse_edge_list("1 0");
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ParseEdgeList, IndexOutOfRangeNamesLine) {
  try {
    parse_edge_list("3 1\n0 3");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseEdgeList, RejectsMalformedInput) {
  EXPECT_THROW(parse_edge_list(""), parse_error);
  EXPECT_THROW(parse_edge_list("x 1\n"), parse_error);
  EXPECT_THROW(parse_edge_list("3 1\n1 1"), parse_error);
  EXPECT_THROW(parse_edge_list("3 2\n0 1"), parse_error);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2"), parse_error);
  EXPECT_THROW(parse_edge_list("3 1\n0 1 2"), parse_error);
}

TEST(ParseEdgeList, CommentsAndLabelsAreSkipped) {
  const Graph g = parse_edge_list("# a comment\n# label 0 x\n2 1\n# between\n0 1\n");
  EXPECT_EQ(g, complete_graph(2));
}

TEST(ParseEdgeList, RoundTripsGeneratedGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = gnp_graph(1 + seed % 12, 0.4, seed);
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g) << "seed " << seed;
  }
}

// --- generators ---------------------------------------------------------------------

TEST(Generate, WheelOnFourVerticesIsK4) { EXPECT_EQ(generate({Family::wheel, 4}), complete_graph(4)); }

TEST(Generate, CycleOnFiveVertices) {
  const Graph g = generate({Family::cycle, 5});
  EXPECT_EQ(g.edge_count(), 5u);
  for (Vertex i = 0; i < 5; ++i) EXPECT_TRUE(g.has_edge(i, (i + 1) % 5));
}

TEST(Generate, CompleteOnSixVerticesHasFifteenEdges) { EXPECT_EQ(generate({Family::complete, 6}).edge_count(), 15u); }

TEST(Generate, BelowFamilyMinimumIsUsageError) {
  EXPECT_THROW(generate({Family::cycle, 2}), usage_error);
  EXPECT_THROW(generate({Family::wheel, 3}), usage_error);
  EXPECT_THROW(generate({Family::gnp, 4, 1.5}), usage_error);
}

TEST(Generate, RandomFamiliesAreDeterministicAndWellFormed) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 11;
    EXPECT_EQ(generate({Family::gnp, n, 0.5, seed}), generate({Family::gnp, n, 0.5, seed}));
    EXPECT_TRUE(is_tree(random_tree(n, seed))) << "n=" << n;
    const Graph tf = random_triangle_free(n, 0.7, seed);
    EXPECT_TRUE(graph_facts(tf).is_triangle_free);
    EXPECT_LE(oracle::clique_number(tf), 2u);
  }
}

TEST(Generate, FamilyNamesRoundTrip) {
  for (auto f : {Family::complete, Family::cycle, Family::path, Family::wheel, Family::star, Family::random_tree,
                 Family::gnp, Family::random_triangle_free})
    EXPECT_EQ(family_from_string(to_string(f)), f);
  EXPECT_FALSE(family_from_string("petersen"));
}

// --- add_universal_vertex -----------------------------------------------------------

TEST(UniversalVertex, CycleBecomesWheel) {
  const Graph g = add_universal_vertex(cycle_graph(5));
  EXPECT_EQ(g, wheel_graph(6));
  EXPECT_EQ(g.label(5), "u");
}

TEST(UniversalVertex, SmallCases) {
  EXPECT_EQ(add_universal_vertex(Graph(1)), complete_graph(2));
  const Graph star = add_universal_vertex(Graph(3));
  EXPECT_EQ(star.degree(3), 3u);
  EXPECT_EQ(star.edge_count(), 3u);
}

TEST(UniversalVertex, DiameterAtMostTwoAndUniversalCount) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gnp_graph(1 + seed % 9, 0.3, seed);
    const Graph gu = add_universal_vertex(g);
    EXPECT_EQ(gu.order(), g.order() + 1);
    EXPECT_LE(graph_facts(gu).diameter.value(), 2u);
    EXPECT_EQ(universal_count(gu), universal_count(g) + 1);
  }
}

// --- simplicial_closure -------------------------------------------------------------

TEST(SimplicialClosure, PathAndStarUnchanged) {
  const Graph p4 = path_graph(4);
  EXPECT_EQ(simplicial_closure(p4, 0, 3), p4);
  const Graph star = star_graph(4);  // center 0
  EXPECT_EQ(simplicial_closure(star, 1, 2), star);
}

TEST(SimplicialClosure, FourCycleGainsOneChord) {
  const Graph c4 = cycle_graph(4);
  // Brute-force neighbor-pair scan: join every pair of neighbors of 0 and of 2.
  Graph expected = c4;
  for (Vertex s : {Vertex{0}, Vertex{2}})
    for (Vertex a = 0; a < 4; ++a)
      for (Vertex b = a + 1; b < 4; ++b)
        if (c4.has_edge(s, a) && c4.has_edge(s, b)) expected.add_edge(a, b);
  EXPECT_EQ(expected.edge_count(), 5u);
  EXPECT_TRUE(expected.has_edge(1, 3));
  EXPECT_EQ(simplicial_closure(c4, 0, 2), expected);
}

TEST(SimplicialClosure, CompletesBothNeighborhoods) {
  auto as_set = [](const VertexSet& vs) {
    std::vector<bool> out(vs.universe(), false);
    for (Vertex v : vs) out[v] = true;
    return out;
  };
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph h = gnp_graph(3 + seed % 6, 0.5, seed);
    const Graph g = simplicial_closure(h, 0, 1);
    EXPECT_TRUE(oracle::is_clique(g, as_set(h.neighbors(0))));
    EXPECT_TRUE(oracle::is_clique(g, as_set(h.neighbors(1))));
    for (auto [a, b] : h.edges()) EXPECT_TRUE(g.has_edge(a, b));
    // Every added edge joins two neighbors of 0 or two neighbors of 1.
    for (auto [a, b] : g.edges())
      EXPECT_TRUE(h.has_edge(a, b) || (h.has_edge(0, a) && h.has_edge(0, b)) || (h.has_edge(1, a) && h.has_edge(1, b)));
    // Non-adjacent endpoints end up simplicial.
    if (!h.has_edge(0, 1)) {
      EXPECT_TRUE(oracle::is_clique(g, as_set(g.neighbors(0))));
      EXPECT_TRUE(oracle::is_clique(g, as_set(g.neighbors(1))));
    }
  }
}

TEST(SimplicialClosure, RejectsEqualEndpoints) { EXPECT_THROW(simplicial_closure(cycle_graph(4), 1, 1), usage_error); }

// --- graph_facts --------------------------------------------------------------------

TEST(GraphFacts, SixCycle) {
  const auto f = graph_facts(cycle_graph(6));
  EXPECT_TRUE(f.is_bipartite);
  EXPECT_TRUE(f.is_triangle_free);
  EXPECT_EQ(f.diameter, 3u);
}

TEST(GraphFacts, K4) {
  const auto f = graph_facts(complete_graph(4));
  EXPECT_FALSE(f.is_triangle_free);
  EXPECT_FALSE(f.is_bipartite);
  EXPECT_EQ(f.diameter, 1u);
}

TEST(GraphFacts, TwoDisjointEdges) {
  const auto f = graph_facts(from_edges(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(f.components, 2u);
  EXPECT_FALSE(f.diameter.has_value());
  EXPECT_EQ(f.distances[0][2], unreachable);
}

TEST(GraphFacts, OddCycleIsNotBipartite) { EXPECT_FALSE(graph_facts(cycle_graph(5)).is_bipartite); }
