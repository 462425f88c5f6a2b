#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ivdg/certificate.hpp"
#include "ivdg/error.hpp"
#include "ivdg/generate.hpp"
#include "ivdg/independent_set.hpp"
#include "ivdg/interval.hpp"
#include "ivdg/oracle.hpp"
#include "ivdg/ordering.hpp"

namespace ivdg {
namespace {

Weight total(const std::vector<Vertex>& s, const std::vector<Weight>& w) {
  Weight t = 0;
  for (Vertex v : s) t += w.empty() ? 1 : w[v];
  return t;
}

TEST(MaxIndependentDuf, Examples) {
  EXPECT_EQ(max_independent_duf(fixtures::no_kernel_digraph(), fixtures::no_kernel_order()).size(), 1U);
  EXPECT_EQ(max_independent_duf(fixtures::path3(), Ordering::identity(3)).set,
            (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(max_independent_duf(Digraph(5), Ordering::identity(5)).size(), 5U);
}

TEST(MaxIndependentDuf, Errors) {
  EXPECT_THROW(max_independent_duf(fixtures::directed_triangle(), Ordering::identity(3)),
               NotDufOrdered);
  std::vector<Weight> w{1, 1};
  EXPECT_THROW(max_independent_duf(fixtures::path3(), Ordering::identity(3), w), DimensionMismatch);
}

TEST(MaxIndependentDuf, WeightedPicksHeavyMiddle) {
  std::vector<Weight> w{1, 5, 1};
  auto cert = max_independent_duf(fixtures::path3(), Ordering::identity(3), w);
  EXPECT_EQ(cert.set, (std::vector<Vertex>{1}));
}

TEST(MaxIndependentDuf, ExhaustiveOnFiveVertexDufDigraphs) {
  auto ord = Ordering::identity(5);
  fixtures::for_each_digraph(5, false, [&](const Digraph& g) {
    if (verify_duf_ordering(g, ord)) return;
    auto cert = max_independent_duf(g, ord);
    ASSERT_TRUE(is_independent(g, cert.set));
    ASSERT_EQ(cert.size(), oracle::brute_max_independent(g).size());
  });
}

TEST(MaxIndependentDuf, WeightedMatchesOracleOnRandomReps) {
  gen::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 14);
    NormalizedRep rep = normalize(gen::random_reflexive_rep({n, static_cast<int>(rng() % 4)}, rng));
    Digraph g = realize_digraph(rep);
    Ordering ord = extract_duf_ordering(rep);
    std::vector<Weight> w;
    if (trial % 2 == 0) {
      for (int v = 0; v < n; ++v) w.push_back(static_cast<Weight>(rng() % 8));
    }
    auto cert = max_independent_duf(g, ord, w);
    EXPECT_TRUE(is_independent(g, cert.set));
    EXPECT_EQ(total(cert.set, w), total(oracle::brute_max_independent(g, w).set, w));
  }
}

TEST(LongestChains, NonAdjacencyIsTransitiveForward) {
  gen::Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    NormalizedRep rep = normalize(gen::random_reflexive_rep({12, 0}, rng));
    Digraph g = realize_digraph(rep);
    Ordering ord = extract_duf_ordering(rep);
    for (int s = 0; s < 50; ++s) {
      int p[3];
      for (int& x : p) x = static_cast<int>(rng() % 12);
      std::sort(p, p + 3);
      if (p[0] == p[1] || p[1] == p[2]) continue;
      Vertex i = ord.perm[p[0]], j = ord.perm[p[1]], k = ord.perm[p[2]];
      if (!g.adjacent(i, j) && !g.adjacent(j, k)) {
        EXPECT_FALSE(g.adjacent(i, k));
      }
    }
    ChainDag dag = longest_chains(g, ord);
    for (int q = 0; q < 12; ++q) {
      if (dag.next[q] >= 0) {
        EXPECT_GT(dag.next[q], q);
        EXPECT_FALSE(g.adjacent(ord.perm[q], ord.perm[dag.next[q]]));
        EXPECT_EQ(dag.value[q], 1 + dag.value[dag.next[q]]);
      }
    }
  }
}

}  // namespace
}  // namespace ivdg
