#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ivdg/error.hpp"
#include "ivdg/generate.hpp"
#include "ivdg/interval.hpp"
#include "ivdg/oracle.hpp"
#include "ivdg/ordering.hpp"

namespace ivdg {
namespace {

// Checks the arcs a witness claims, straight from the pattern table.
bool witness_holds(const Digraph& g, const Ordering& ord, const StructureWitness& w) {
  auto pos = positions(ord, g.vertex_count());
  auto [a, b, c, d] = w.vertices;
  auto e = [&](Vertex x, Vertex y) { return g.has_edge(x, y); };
  switch (w.kind) {
    case StructureKind::duf_out:
      return pos[a] < pos[b] && pos[b] < pos[c] && e(a, c) && !e(a, b) && !e(b, c);
    case StructureKind::duf_in:
      return pos[a] < pos[b] && pos[b] < pos[c] && e(c, a) && !e(c, b) && !e(b, a);
    default:
      break;
  }
  bool collapse = b == c;
  if (!(pos[a] < pos[b] && pos[b] <= pos[c] && pos[c] < pos[d])) return false;
  switch (w.kind) {
    case StructureKind::i: return e(a, d) && !e(a, b) && !e(c, d);
    case StructureKind::ii: return e(a, d) && e(b, c) && !e(a, c) && !e(b, d);
    case StructureKind::iii: return !collapse && e(a, c) && e(b, d) && !e(a, d) && !e(b, c);
    case StructureKind::iv: return e(d, a) && !e(b, a) && !e(d, c);
    case StructureKind::v: return e(d, a) && e(c, b) && !e(c, a) && !e(d, b);
    case StructureKind::vi: return !collapse && e(c, a) && e(d, b) && !e(d, a) && !e(c, b);
    default: return false;
  }
}

Digraph looped(int n, std::vector<Arc> arcs) {
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, v});
  return Digraph(n, arcs);
}

TEST(VerifyDufOrdering, DirectedTriangleHasNone) {
  Digraph g = fixtures::directed_triangle();
  for (const Ordering& ord : fixtures::all_orderings(3)) {
    auto w = verify_duf_ordering(g, ord);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(witness_holds(g, ord, *w));
  }
}

TEST(VerifyDufOrdering, Examples) {
  EXPECT_FALSE(verify_duf_ordering(fixtures::no_kernel_digraph(), fixtures::no_kernel_order()).has_value());
  EXPECT_FALSE(verify_duf_ordering(fixtures::path3(), Ordering::identity(3)).has_value());
  auto w = verify_duf_ordering(fixtures::path3(), Ordering{1, 0, 2});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, StructureKind::duf_out);
  EXPECT_EQ(w->vertices, (std::array<Vertex, 4>{1, 0, 2, -1}));
  auto spanning = verify_duf_ordering(Digraph(3, {{0, 2}}), Ordering::identity(3));
  ASSERT_TRUE(spanning.has_value());
  EXPECT_EQ(spanning->kind, StructureKind::duf_out);
  auto back = verify_duf_ordering(Digraph(3, {{2, 0}}), Ordering::identity(3));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->kind, StructureKind::duf_in);
}

TEST(VerifyDufOrdering, RejectsNonPermutation) {
  EXPECT_THROW(verify_duf_ordering(fixtures::path3(), Ordering{0, 0, 1}), InvalidOrdering);
  EXPECT_THROW(verify_duf_ordering(fixtures::path3(), Ordering{0, 1}), InvalidOrdering);
}

TEST(VerifyDufOrdering, MatchesTripleScanExhaustively) {
  fixtures::for_each_digraph(4, false, [](const Digraph& g) {
    for (const Ordering& ord : {Ordering::identity(4), Ordering{3, 1, 0, 2}}) {
      auto pos = positions(ord, 4);
      bool violated = false;
      for (Vertex i = 0; i < 4; ++i) {
        for (Vertex j = 0; j < 4; ++j) {
          for (Vertex k = 0; k < 4; ++k) {
            if (!(pos[i] < pos[j] && pos[j] < pos[k])) continue;
            violated = violated || (g.has_edge(i, k) && !g.has_edge(i, j) && !g.has_edge(j, k)) ||
                       (g.has_edge(k, i) && !g.has_edge(k, j) && !g.has_edge(j, i));
          }
        }
      }
      auto w = verify_duf_ordering(g, ord);
      ASSERT_EQ(w.has_value(), violated);
      if (w) {
        EXPECT_TRUE(witness_holds(g, ord, *w));
      }
    }
  });
}

TEST(BuildRepresentation, SingleLoopedVertex) {
  IntervalRep rep = build_representation(Digraph(1, {{0, 0}}), Ordering::identity(1));
  EXPECT_EQ(rep[0].source, fixtures::iv(1, 1));
  EXPECT_EQ(rep[0].target, fixtures::iv(1, 1));
}

TEST(BuildRepresentation, ReflexivePathOfTwo) {
  Digraph g = looped(2, {{0, 1}});
  IntervalRep rep = build_representation(g, Ordering::identity(2));
  EXPECT_EQ(rep[0].source, fixtures::iv(1, 2));
  EXPECT_EQ(rep[0].target, fixtures::iv(1, 1));
  EXPECT_EQ(rep[1].source, fixtures::iv(2, 2));
  EXPECT_EQ(rep[1].target, fixtures::iv(2, 2));
  EXPECT_TRUE(verify_representation(rep, g));
}

TEST(BuildRepresentation, Errors) {
  EXPECT_THROW(build_representation(fixtures::path3(), Ordering::identity(3)), NotReflexive);
  Digraph g = looped(4, {{0, 3}});
  try {
    build_representation(g, Ordering::identity(4));
    FAIL() << "expected ForbiddenStructure";
  } catch (const ForbiddenStructure& e) {
    EXPECT_EQ(e.witness().kind, StructureKind::i);
  }
}

TEST(BuildRepresentation, RoundTripsRandomReflexiveReps) {
  gen::Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 25);
    IntervalRep source = gen::random_reflexive_rep({n, static_cast<int>(rng() % 5)}, rng);
    Digraph g = realize_digraph(source);
    Ordering ord = extract_duf_ordering(normalize(source));
    IntervalRep rep = build_representation(g, ord);
    EXPECT_TRUE(verify_representation(rep, g));
    EXPECT_TRUE(is_reflexive(rep));
  }
}

TEST(CheckReflexiveIntervalOrdering, Examples) {
  Digraph two_arcs = looped(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(check_reflexive_interval_ordering(two_arcs, Ordering::identity(4)).has_value());
  Digraph spanning = looped(4, {{0, 3}});
  auto w = check_reflexive_interval_ordering(spanning, Ordering::identity(4));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, StructureKind::i);
  EXPECT_EQ(w->vertices, (std::array<Vertex, 4>{0, 1, 1, 3}));
  EXPECT_THROW(check_reflexive_interval_ordering(fixtures::path3(), Ordering::identity(3)),
               NotReflexive);
}

TEST(CheckReflexiveIntervalOrdering, OneWayK33HasNoValidOrdering) {
  Digraph g = fixtures::one_way_k33();
  for (const Ordering& ord : fixtures::all_orderings(6)) {
    auto w = check_reflexive_interval_ordering(g, ord);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(witness_holds(g, ord, *w));
  }
}

TEST(CheckReflexiveIntervalOrdering, AgreesWithQuadrupleScanOnFourVertices) {
  fixtures::for_each_reflexive_digraph(4, [](const Digraph& g) {
    auto ord = Ordering::identity(4);
    auto fast = check_reflexive_interval_ordering(g, ord);
    auto slow = oracle::brute_forbidden_structure(g, ord);
    ASSERT_EQ(fast.has_value(), slow.has_value());
    if (fast) {
      EXPECT_EQ(*fast, *slow);
      EXPECT_TRUE(witness_holds(g, ord, *fast));
    }
    bool realized = verify_representation(construct_representation(g, ord), g);
    EXPECT_EQ(realized, !fast.has_value());
  });
}

TEST(FindForbiddenStructure, ReturnsValidWitnesses) {
  gen::Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    Digraph base = gen::random_digraph(7, 0.3, 1.0, rng);
    auto perm = fixtures::all_vertices(7);
    std::shuffle(perm.begin(), perm.end(), rng);
    Ordering ord(perm);
    auto w = find_forbidden_structure(base, ord);
    EXPECT_EQ(w, oracle::brute_forbidden_structure(base, ord));
    if (w) {
      EXPECT_TRUE(witness_holds(base, ord, *w));
    }
  }
}

TEST(VerifyCocomparabilityOrdering, Examples) {
  UndirectedGraph p3(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(verify_cocomparability_ordering(p3, Ordering{0, 1, 2}).has_value());
  EXPECT_FALSE(verify_cocomparability_ordering(p3, Ordering{0, 2, 1}).has_value());
  EXPECT_FALSE(verify_cocomparability_ordering(p3, Ordering{1, 0, 2}).has_value());
  EXPECT_FALSE(verify_cocomparability_ordering(fixtures::k33(), Ordering::identity(6)).has_value());
  UndirectedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (const Ordering& ord : fixtures::all_orderings(4)) {
    EXPECT_FALSE(verify_cocomparability_ordering(k4, ord).has_value());
  }
  auto w = verify_cocomparability_ordering(UndirectedGraph(3, {{0, 2}}), Ordering::identity(3));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, StructureKind::umbrella);
  EXPECT_THROW(verify_cocomparability_ordering(p3, Ordering{0, 1}), InvalidOrdering);
}

TEST(VerifyCocomparabilityOrdering, HoldsUnderEveryDufOrdering) {
  gen::Rng rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalRep rep = gen::random_reflexive_rep({10, 0}, rng);
    Digraph g = realize_digraph(rep);
    Ordering ord = extract_duf_ordering(normalize(rep));
    ASSERT_FALSE(verify_duf_ordering(g, ord).has_value());
    EXPECT_FALSE(verify_cocomparability_ordering(underlying_undirected(g), ord).has_value());
  }
  fixtures::for_each_digraph(4, false, [](const Digraph& g) {
    if (!verify_duf_ordering(g, Ordering::identity(4))) {
      EXPECT_FALSE(
          verify_cocomparability_ordering(underlying_undirected(g), Ordering::identity(4)));
    }
  });
}

TEST(StructureKind, Names) {
  EXPECT_EQ(to_string(StructureKind::i), "i");
  EXPECT_EQ(to_string(StructureKind::vi), "vi");
  EXPECT_EQ(to_string(StructureKind::duf_out), "duf-out");
  EXPECT_EQ(to_string(StructureKind::unlocated), "unlocated");
}

}  // namespace
}  // namespace ivdg
