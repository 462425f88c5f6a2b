#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "ivdg/certificate.hpp"
#include "ivdg/error.hpp"
#include "ivdg/generate.hpp"
#include "ivdg/graph.hpp"

namespace ivdg {
namespace {

using fixtures::subset_of;

TEST(Digraph, AdjacencyListsAreConsistent) {
  Digraph g(4, {{0, 1}, {0, 1}, {1, 0}, {2, 2}, {3, 1}, {0, 3}});
  EXPECT_EQ(g.edge_count(), 4U);
  EXPECT_EQ(g.loop_count(), 1U);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v : g.out_neighbours(u)) {
      EXPECT_NE(u, v);
      auto in = g.in_neighbours(v);
      EXPECT_NE(std::find(in.begin(), in.end(), u), in.end());
    }
  }
  EXPECT_TRUE(g.has_loop(2));
  EXPECT_TRUE(g.has_edge(2, 2));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_FALSE(g.adjacent(2, 2));
}

TEST(Digraph, RejectsOutOfRangeArc) {
  EXPECT_THROW(Digraph(2, {{0, 2}}), InvalidVertex);
  EXPECT_THROW(Digraph(2, {{-1, 0}}), InvalidVertex);
}

TEST(Digraph, ArcsListLoopsAndEdgesSorted) {
  Digraph g(3, {{2, 0}, {1, 1}, {0, 2}});
  std::vector<Arc> expected{{0, 2}, {1, 1}, {2, 0}};
  EXPECT_EQ(g.arcs(), expected);
}

TEST(Reverse, SingleArc) {
  Digraph g(2, {{0, 1}});
  EXPECT_EQ(reverse(g), Digraph(2, {{1, 0}}));
}

TEST(Reverse, EmptyGraphIsFixed) {
  Digraph g(3);
  EXPECT_EQ(reverse(g), g);
}

TEST(Reverse, IsAnInvolution) {
  Digraph g = fixtures::no_kernel_digraph();
  EXPECT_EQ(reverse(reverse(g)), g);
  Digraph looped(2, {{0, 0}, {0, 1}});
  EXPECT_TRUE(reverse(looped).has_loop(0));
}

TEST(InducedSubgraph, PathEndpoints) {
  std::vector<Vertex> keep{0, 2};
  auto sub = induced_subgraph(fixtures::path3(), keep);
  EXPECT_EQ(sub.graph, Digraph(2));
  EXPECT_EQ(sub.to_original, keep);
  EXPECT_EQ(sub.from_original[1], -1);
}

TEST(InducedSubgraph, WholeVertexSetIsACopy) {
  Digraph g = fixtures::no_kernel_digraph();
  auto all = fixtures::all_vertices(4);
  auto sub = induced_subgraph(g, all);
  EXPECT_EQ(sub.graph, g);
  EXPECT_EQ(sub.to_original, all);
}

TEST(InducedSubgraph, SemicompletePairIsSymmetric) {
  std::vector<Vertex> keep{0, 1};
  auto sub = induced_subgraph(fixtures::no_kernel_digraph(), keep);
  EXPECT_EQ(sub.graph, Digraph(2, {{0, 1}, {1, 0}}));
}

TEST(InducedSubgraph, KeepsLoopsAndRejectsBadVertex) {
  Digraph g(3, {{1, 1}, {1, 2}});
  std::vector<Vertex> keep{1, 2};
  EXPECT_EQ(induced_subgraph(g, keep).graph, Digraph(2, {{0, 0}, {0, 1}}));
  std::vector<Vertex> bad{0, 3};
  EXPECT_THROW(induced_subgraph(g, bad), InvalidVertex);
}

TEST(UnderlyingUndirected, Examples) {
  EXPECT_EQ(underlying_undirected(Digraph(2, {{0, 1}, {1, 0}})), UndirectedGraph(2, {{0, 1}}));
  EXPECT_EQ(underlying_undirected(fixtures::directed_triangle()),
            UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(underlying_undirected(Digraph(2, {{0, 0}, {1, 1}})), UndirectedGraph(2));
}

TEST(SymmetricDigraph, Examples) {
  EXPECT_EQ(symmetric_digraph(UndirectedGraph(2, {{0, 1}})), Digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(symmetric_digraph(UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}})).edge_count(), 6U);
}

TEST(SymmetricDigraph, C4KernelsAreIndependentDominatingSets) {
  UndirectedGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Digraph g = symmetric_digraph(c4);
  EXPECT_EQ(g.edge_count(), 8U);
  int kernels = 0;
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    auto s = subset_of(mask, 4);
    bool independent = true;
    bool dominating = true;
    for (Vertex u : s) {
      for (Vertex v : s) independent = independent && !c4.has_edge(u, v);
    }
    for (Vertex v = 0; v < 4; ++v) {
      bool covered = std::find(s.begin(), s.end(), v) != s.end();
      for (Vertex u : s) covered = covered || c4.has_edge(u, v);
      dominating = dominating && covered;
    }
    bool kernel = verify_set(g, s, SetMode::kernel).holds(SetMode::kernel);
    EXPECT_EQ(kernel, independent && dominating) << "mask " << mask;
    kernels += kernel;
  }
  EXPECT_EQ(kernels, 2);
}

TEST(SymmetricDigraph, UnderlyingIsALeftInverse) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph g = gen::random_digraph(8, 0.4, 0.0, rng);
    UndirectedGraph h = underlying_undirected(g);
    EXPECT_EQ(underlying_undirected(symmetric_digraph(h)), h);
  }
}

TEST(VerifySet, Examples) {
  Digraph dg = fixtures::no_kernel_digraph();
  for (Vertex v = 0; v < 4; ++v) {
    std::vector<Vertex> s{v};
    auto cert = verify_set(dg, s, SetMode::kernel);
    EXPECT_FALSE(cert.checks.at(SetMode::absorbing));
    EXPECT_FALSE(cert.holds(SetMode::kernel));
  }
  std::vector<Vertex> ends{0, 2};
  EXPECT_TRUE(verify_set(fixtures::path3(), ends, SetMode::kernel).holds(SetMode::kernel));
  auto all = fixtures::all_vertices(4);
  EXPECT_TRUE(verify_set(dg, all, SetMode::absorbing).holds(SetMode::absorbing));
}

TEST(VerifySet, PathKernelsByExhaustion) {
  Digraph g = fixtures::path3();
  std::vector<std::vector<Vertex>> kernels;
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    auto s = subset_of(mask, 3);
    if (verify_set(g, s, SetMode::kernel).holds(SetMode::kernel)) kernels.push_back(s);
  }
  ASSERT_EQ(kernels.size(), 1U);
  EXPECT_EQ(kernels[0], (std::vector<Vertex>{0, 2}));
}

TEST(VerifySet, LoopsNeverExemptOutsideVertices) {
  Digraph g(2, {{0, 0}, {1, 1}});
  std::vector<Vertex> s{0};
  EXPECT_FALSE(is_absorbing(g, s));
  EXPECT_FALSE(is_dominating(g, s));
  EXPECT_TRUE(is_independent(g, s));
}

TEST(VerifySet, RejectsOutOfRangeVertex) {
  std::vector<Vertex> s{5};
  EXPECT_THROW(verify_set(fixtures::path3(), s, SetMode::independent), InvalidVertex);
}

TEST(VerifySet, SolutionIsIndependentAndDominating) {
  std::vector<Vertex> s{0};
  auto cert = verify_set(Digraph(2, {{0, 1}}), s, SetMode::solution);
  EXPECT_TRUE(cert.holds(SetMode::solution));
  EXPECT_TRUE(cert.checks.at(SetMode::dominating));
  EXPECT_FALSE(verify_set(Digraph(2, {{0, 1}}), s, SetMode::kernel).holds(SetMode::kernel));
}

TEST(VerifySet, AbsorbingInGraphIsDominatingInReverse) {
  gen::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph g = gen::random_digraph(7, 0.3, 0.3, rng);
    Digraph r = reverse(g);
    auto s = subset_of(rng() & 0x7F, 7);
    EXPECT_EQ(is_absorbing(g, s), is_dominating(r, s));
    EXPECT_EQ(verify_set(g, s, SetMode::kernel).holds(SetMode::kernel),
              verify_set(r, s, SetMode::solution).holds(SetMode::solution));
  }
}

TEST(SetMode, TextRoundTrip) {
  for (SetMode m : {SetMode::independent, SetMode::absorbing, SetMode::dominating, SetMode::kernel,
                    SetMode::solution}) {
    EXPECT_EQ(parse_set_mode(to_string(m)), m);
  }
  EXPECT_FALSE(parse_set_mode("clique").has_value());
}

}  // namespace
}  // namespace ivdg
