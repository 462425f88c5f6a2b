#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ivdg/graph.hpp"
#include "ivdg/interval.hpp"
#include "ivdg/vertex_order.hpp"

namespace ivdg::fixtures {

/// Semi-complete four-vertex DUF-digraph without a kernel; a, b, c, d = 0..3.
inline Digraph no_kernel_digraph() {
  return Digraph(4, {{0, 1}, {1, 0}, {2, 0}, {0, 3}, {1, 2}, {3, 1}, {2, 3}, {3, 2}});
}

inline Ordering no_kernel_order() { return Ordering::identity(4); }

inline Digraph directed_triangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Digraph symmetric_triangle() {
  return Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
}

inline Digraph path3() { return Digraph(3, {{0, 1}, {1, 2}}); }

/// (a,b), (a,c), (b,c), (c,b), (c,d) with a, b, c, d = 0..3.
inline Digraph anti_walk_graph() { return Digraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 1}, {2, 3}}); }

/// K_{3,3} with every edge oriented from {0,1,2} to {3,4,5}, plus all loops.
inline Digraph one_way_k33() {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < 6; ++u) arcs.push_back({u, u});
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 3; v < 6; ++v) arcs.push_back({u, v});
  }
  return Digraph(6, arcs);
}

inline UndirectedGraph k33() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 3; v < 6; ++v) edges.push_back({u, v});
  }
  return UndirectedGraph(6, edges);
}

inline Interval iv(Rational lo, Rational hi) { return {lo, hi}; }

/// S0=[0,2], T0=[1,3], S1=[4,6], T1=[3/2,5]: arc (0,1) plus both loops.
inline IntervalRep two_vertex_rep() {
  return IntervalRep({{iv(0, 2), iv(1, 3)}, {iv(4, 6), iv(Rational(3, 2), 5)}});
}

/// Adjusted representation of v2, v3, v4 -> v1 with loops (v1 = 0).
inline IntervalRep adjusted_star() {
  std::vector<IntervalPair> pairs{{iv(0, 0), iv(0, 10)}};
  for (int i = 2; i <= 4; ++i) pairs.push_back({iv(2 * i, 2 * i), iv(2 * i, 2 * i)});
  return IntervalRep(std::move(pairs));
}

inline std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  return vs;
}

inline std::vector<Vertex> subset_of(std::uint64_t mask, int n) {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) s.push_back(v);
  }
  return s;
}

/// Calls f(g) for every digraph on n vertices; loops enumerated when asked.
template <class F>
void for_each_digraph(int n, bool with_loops, F&& f) {
  std::vector<Arc> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v || with_loops) slots.push_back({u, v});
    }
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Arc> arcs;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    arcs.clear();
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) arcs.push_back(slots[i]);
    }
    f(Digraph(n, arcs));
  }
}

/// Like for_each_digraph but every vertex carries a loop.
template <class F>
void for_each_reflexive_digraph(int n, F&& f) {
  std::vector<Arc> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) slots.push_back({u, v});
    }
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Arc> arcs;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    arcs.clear();
    for (Vertex v = 0; v < n; ++v) arcs.push_back({v, v});
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) arcs.push_back(slots[i]);
    }
    f(Digraph(n, arcs));
  }
}

inline std::vector<Ordering> all_orderings(int n) {
  std::vector<Ordering> out;
  auto perm = all_vertices(n);
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace ivdg::fixtures
