#include <gtest/gtest.h>

#include "ivdg/generate.hpp"
#include "ivdg/interval.hpp"
#include "ivdg/io.hpp"
#include "ivdg/point_point.hpp"

namespace ivdg {
namespace {

TEST(Generate, FixedSeedIsDeterministic) {
  gen::Rng a(7), b(7);
  EXPECT_EQ(io::emit(gen::random_reflexive_rep({5, 0}, a)), io::emit(gen::random_reflexive_rep({5, 0}, b)));
  EXPECT_EQ(gen::random_digraph(9, 0.3, 0.2, a), gen::random_digraph(9, 0.3, 0.2, b));
  EXPECT_EQ(gen::random_interval_bigraph(4, 5, 10, a), gen::random_interval_bigraph(4, 5, 10, b));
}

TEST(Generate, ReflexiveRepsAreReflexiveAndOnTheGrid) {
  gen::Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 20);
    int span = static_cast<int>(rng() % 4);
    IntervalRep rep = gen::random_reflexive_rep({n, span}, rng);
    EXPECT_TRUE(is_reflexive(rep));
    for (const auto& p : rep.pairs()) {
      for (const Interval& x : {p.source, p.target}) {
        EXPECT_GE(x.lo, 0);
        EXPECT_LE(x.hi, 4 * n);
        EXPECT_EQ(x.lo.denominator(), 1);
        if (span > 0) {
          EXPECT_LE(x.hi - x.lo, 2 * span);
        }
      }
    }
  }
}

TEST(Generate, AdjustedRepsShareLeftEndpoints) {
  gen::Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    IntervalRep rep = gen::random_adjusted_rep({10, 0}, rng);
    EXPECT_TRUE(rep.adjusted());
    EXPECT_TRUE(is_reflexive(rep));
  }
}

TEST(Generate, DigraphProbabilities) {
  gen::Rng rng(3);
  EXPECT_EQ(gen::random_digraph(6, 0.0, 0.0, rng), Digraph(6));
  Digraph full = gen::random_digraph(5, 1.0, 1.0, rng);
  EXPECT_EQ(full.edge_count(), 20U);
  EXPECT_TRUE(full.is_reflexive());
  EXPECT_THROW(gen::random_digraph(-1, 0.5, 0.0, rng), std::invalid_argument);
  EXPECT_THROW(gen::random_digraph(3, 1.5, 0.0, rng), std::invalid_argument);
}

TEST(Generate, SubdividedInstances) {
  gen::Rng rng(4);
  SubdivisionMap map = gen::random_subdivided(6, 0.4, 2, rng);
  EXPECT_TRUE(map.origin.is_irreflexive());
  EXPECT_EQ(map.host.vertex_count(), 6 + 2 * static_cast<int>(map.origin.edge_count()));
}

}  // namespace
}  // namespace ivdg
