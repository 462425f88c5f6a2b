#pragma once

#include <optional>
#include <vector>

#include "ivdg/certificate.hpp"
#include "ivdg/graph.hpp"
#include "ivdg/interval.hpp"

namespace ivdg {

/// Bipartite graph with parts A = {0..a-1} and B = {a..a+b-1} of `graph`.
struct Bigraph {
  int a_size = 0;
  int b_size = 0;
  UndirectedGraph graph;

  Vertex a_vertex(int i) const noexcept { return i; }
  Vertex b_vertex(int j) const noexcept { return a_size + j; }
};

/// One interval per vertex of each part; a_i ~ b_j iff the intervals meet.
class IntervalBigraphRep {
 public:
  IntervalBigraphRep() = default;
  /// Throws MalformedInterval (vertex index within its part).
  IntervalBigraphRep(std::vector<Interval> a, std::vector<Interval> b);

  int a_size() const noexcept { return static_cast<int>(a_.size()); }
  int b_size() const noexcept { return static_cast<int>(b_.size()); }
  const std::vector<Interval>& a() const noexcept { return a_; }
  const std::vector<Interval>& b() const noexcept { return b_; }
  bool adjacent(int i, int j) const;

  Bigraph to_bigraph() const;

  friend bool operator==(const IntervalBigraphRep&, const IntervalBigraphRep&) = default;

 private:
  std::vector<Interval> a_;
  std::vector<Interval> b_;
};

struct SplittingBigraph {
  /// A = V' (u' = u), B = V'' (u'' = n + u); loops give u'u'' edges.
  Bigraph bigraph;
  /// I(u') = S_u, I(u'') = T_u when a representation was supplied.
  std::optional<IntervalBigraphRep> rep;
};

SplittingBigraph splitting_bigraph(const Digraph& g);
/// Throws DimensionMismatch if rep and g differ in size or realized arcs.
SplittingBigraph splitting_bigraph(const Digraph& g, const IntervalRep& rep);

/// Greedy state over A sorted by right end-point (index k = k-th in order).
struct RedBlueState {
  std::vector<int> order;                    // order[k] = A-vertex
  std::vector<Rational> rho;                 // max right end over N(order[k])
  std::vector<int> best;                     // R: B-vertex attaining rho
  std::vector<std::optional<int>> lambda;    // min k' with rho[k] < l(I_order[k'])
  std::vector<int> visited;                  // indices k taken by the greedy walk
};

/// nullopt if some A-vertex is isolated (then no A-dominating set exists).
std::optional<RedBlueState> red_blue_state(const IntervalBigraphRep& rep);

/// Minimum subset of B (B-indices) dominating all of A, or nullopt when an
/// A-vertex is isolated. O(n log n).
std::optional<Certificate> red_blue_min_dominating(const IntervalBigraphRep& rep);

/// Minimum absorbing set of a reflexive interval digraph. Throws NotReflexive.
Certificate min_absorbing_reflexive(const NormalizedRep& rep);
/// Minimum dominating set, via the reversed representation.
Certificate min_dominating_reflexive(const NormalizedRep& rep);

}  // namespace ivdg
