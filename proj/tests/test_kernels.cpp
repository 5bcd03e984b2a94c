#include <gtest/gtest.h>

#include "gconv/gconv.hpp"
#include "oracles.hpp"

using namespace gconv;

namespace {

// Brute-force answer to "gp_p3(G) >= k".
bool answer(const Graph& g, std::size_t k) { return oracle::dissociation_number(g) >= k; }

Graph star_with_leaves(std::size_t leaves) { return star_graph(leaves + 1); }

}  // namespace

// --- twin_partition -----------------------------------------------------------------

TEST(TwinPartition, CompleteGraphIsOneCliqueClass) {
  const auto classes = twin_partition(complete_graph(5));
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_TRUE(classes[0].clique);
  EXPECT_EQ(classes[0].members.size(), 5u);
}

TEST(TwinPartition, FourCycleHasTwoAntipodalClasses) {
  const auto classes = twin_partition(cycle_graph(4));
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].members, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(classes[1].members, (std::vector<Vertex>{1, 3}));
  EXPECT_FALSE(classes[0].clique);
  EXPECT_FALSE(classes[1].clique);
}

TEST(TwinPartition, PathOnFourVerticesIsAllSingletons) {
  const auto classes = twin_partition(path_graph(4));
  EXPECT_EQ(classes.size(), 4u);
  for (const auto& c : classes) EXPECT_EQ(c.members.size(), 1u);
}

TEST(TwinPartition, ClassesAreUniformAndPartition) {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const Graph g = t % 2 ? suites::random_blowup(rng, 12) : gnp_graph(rng.between(1, 10), rng.unit(), rng.next());
    const auto classes = twin_partition(g);
    std::vector<int> seen(g.order(), 0);
    for (const auto& c : classes) {
      for (Vertex a : c.members) {
        ++seen[a];
        for (Vertex b : c.members) {
          if (a == b) continue;
          EXPECT_EQ(g.has_edge(a, b), c.clique);
          // Twins agree on every vertex outside {a, b}.
          for (Vertex w = 0; w < g.order(); ++w) {
            if (w != a && w != b) {
              EXPECT_EQ(g.has_edge(a, w), g.has_edge(b, w));
            }
          }
        }
      }
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

// --- nd_kernel ------------------------------------------------------------------------

TEST(NdKernel, IndependentClassDecidesYes) {
  const auto out = nd_kernel(Graph(5), 4);
  ASSERT_TRUE(out.is_decided());
  EXPECT_TRUE(*out.decided);
}

TEST(NdKernel, CompleteGraphShrinksToAnEdge) {
  const auto out = nd_kernel(complete_graph(7), 3);
  ASSERT_FALSE(out.is_decided());
  EXPECT_EQ(out.reduced, complete_graph(2));
  EXPECT_EQ(out.origin, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(oracle::dissociation_number(complete_graph(7)), 2u);
  EXPECT_FALSE(answer(out.reduced, 3));
}

TEST(NdKernel, FourCycleIsUnchanged) {
  const auto out = nd_kernel(cycle_graph(4), 3);
  ASSERT_FALSE(out.is_decided());
  EXPECT_EQ(out.reduced, cycle_graph(4));
  // Any three vertices of C_4 induce a P_3, so gp_p3(C_4) = 2 and the answer is NO.
  EXPECT_EQ(oracle::dissociation_number(cycle_graph(4)), 2u);
  EXPECT_FALSE(answer(out.reduced, 3));
  EXPECT_LE(out.reduced.order(), out.bound);
}

TEST(NdKernel, TrivialThresholds) {
  EXPECT_EQ(nd_kernel(complete_graph(3), 4).decided, false);
  EXPECT_EQ(nd_kernel(complete_graph(5), 2).decided, true);
  EXPECT_EQ(nd_kernel(complete_graph(5), 0).decided, true);
}

TEST(NdKernel, PreservesAnswerAndBound) {
  Rng rng(7);
  for (int t = 0; t < 80; ++t) {
    const Graph g = t % 2 ? suites::random_blowup(rng, 12) : gnp_graph(rng.between(1, 12), rng.unit(), rng.next());
    const std::size_t k = rng.between(3, 5);
    const bool truth = answer(g, k);
    const auto out = nd_kernel(g, k);
    if (out.is_decided()) {
      EXPECT_EQ(*out.decided, truth);
      continue;
    }
    EXPECT_EQ(answer(out.reduced, k), truth) << serialize_edge_list(g) << "k=" << k;
    EXPECT_LE(out.reduced.order(), twin_partition(g).size() * (k - 1));
    for (Vertex a = 0; a < out.reduced.order(); ++a)
      for (Vertex b = 0; b < out.reduced.order(); ++b)
        if (a != b) {
          EXPECT_EQ(out.reduced.has_edge(a, b), g.has_edge(out.origin[a], out.origin[b]));
        }
  }
}

// --- vertex cover ---------------------------------------------------------------------

TEST(VertexCover, Examples) {
  EXPECT_TRUE(vertex_cover_2approx(Graph(4)).empty());
  EXPECT_EQ(vertex_cover_2approx(complete_graph(2)), VertexSet(2, {0, 1}));
  EXPECT_EQ(vertex_cover_2approx(star_with_leaves(4)), VertexSet(5, {0, 1}));
}

TEST(VertexCover, ValidAndWithinFactorTwo) {
  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const Graph g = gnp_graph(rng.between(1, 14), rng.unit() * 0.5, rng.next());
    const VertexSet s = vertex_cover_2approx(g);
    for (auto [a, b] : g.edges()) EXPECT_TRUE(s.contains(a) || s.contains(b));
    EXPECT_LE(s.size(), 2 * minimum_vertex_cover_size(g));
  }
}

// --- vc_kernel ------------------------------------------------------------------------

TEST(VcKernel, StarDecidesYes) {
  const auto out = vc_kernel(star_with_leaves(5), 4);
  ASSERT_TRUE(out.is_decided());
  EXPECT_TRUE(*out.decided);
}

TEST(VcKernel, K4IsNotDecided) {
  const auto out = vc_kernel(complete_graph(4), 4);
  ASSERT_FALSE(out.is_decided());
  EXPECT_EQ(minimum_vertex_cover_size(complete_graph(4)), 3u);
  EXPECT_EQ(out.bound, 4u + 4 - 1);
  EXPECT_LE(out.reduced.order(), out.bound);
  EXPECT_LE(out.reduced.order(), 2 * 3 + 3);
}

TEST(VcKernel, KBeyondOrderDecidesNo) {
  Graph matching(6);
  matching.add_edge(0, 1);
  matching.add_edge(2, 3);
  matching.add_edge(4, 5);
  const auto out = vc_kernel(matching, 7);
  ASSERT_TRUE(out.is_decided());
  EXPECT_FALSE(*out.decided);
  EXPECT_THROW(vc_kernel(matching, 0), usage_error);
}

TEST(VcKernel, PreservesAnswerAndBound) {
  Rng rng(11);
  for (int t = 0; t < 80; ++t) {
    const Graph g = gnp_graph(rng.between(1, 12), rng.unit(), rng.next());
    const std::size_t k = rng.between(3, 5);
    const auto out = vc_kernel(g, k);
    if (out.is_decided()) {
      EXPECT_EQ(*out.decided, answer(g, k));
      continue;
    }
    EXPECT_EQ(answer(out.reduced, k), answer(g, k));
    EXPECT_LE(out.reduced.order(), vertex_cover_2approx(g).size() + k - 1);
  }
}
