#include "ivdg/generate.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivdg::gen {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// An interval containing `anchor` inside [0, grid].
Interval around(Rng& rng, int anchor, int grid, int span) {
  int lo = span > 0 ? std::max(0, anchor - uniform(rng, 0, span)) : uniform(rng, 0, anchor);
  int hi = span > 0 ? std::min(grid, anchor + uniform(rng, 0, span)) : uniform(rng, anchor, grid);
  return {Rational(lo), Rational(hi)};
}

Interval anywhere(Rng& rng, int grid) {
  int x = uniform(rng, 0, grid), y = uniform(rng, 0, grid);
  return {Rational(std::min(x, y)), Rational(std::max(x, y))};
}

void check(const ReflexiveParams& p) {
  if (p.n < 0 || p.span < 0) throw std::invalid_argument("n and span must be non-negative");
}

}  // namespace

IntervalRep random_reflexive_rep(const ReflexiveParams& params, Rng& rng) {
  check(params);
  const int grid = 4 * params.n;
  std::vector<IntervalPair> pairs;
  pairs.reserve(static_cast<std::size_t>(params.n));
  for (int v = 0; v < params.n; ++v) {
    int anchor = uniform(rng, 0, grid);
    Interval s = around(rng, anchor, grid, params.span);
    Interval t = around(rng, anchor, grid, params.span);
    pairs.push_back({s, t});
  }
  return IntervalRep(std::move(pairs));
}

IntervalRep random_adjusted_rep(const ReflexiveParams& params, Rng& rng) {
  check(params);
  const int grid = 4 * params.n;
  std::vector<IntervalPair> pairs;
  pairs.reserve(static_cast<std::size_t>(params.n));
  for (int v = 0; v < params.n; ++v) {
    int left = uniform(rng, 0, grid);
    auto right = [&] {
      return params.span > 0 ? std::min(grid, left + uniform(rng, 0, params.span)) : uniform(rng, left, grid);
    };
    int rs = right();
    int rt = right();
    pairs.push_back({{Rational(left), Rational(rs)}, {Rational(left), Rational(rt)}});
  }
  return IntervalRep(std::move(pairs));
}

IntervalRep random_interval_rep(int n, int grid, Rng& rng) {
  if (n < 0 || grid < 0) throw std::invalid_argument("n and grid must be non-negative");
  std::vector<IntervalPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Interval s = anywhere(rng, grid);
    Interval t = anywhere(rng, grid);
    pairs.push_back({s, t});
  }
  return IntervalRep(std::move(pairs));
}

IntervalBigraphRep random_interval_bigraph(int a, int b, int grid, Rng& rng) {
  if (a < 0 || b < 0 || grid < 0) throw std::invalid_argument("sizes and grid must be non-negative");
  std::vector<Interval> as, bs;
  for (int i = 0; i < a; ++i) as.push_back(anywhere(rng, grid));
  for (int j = 0; j < b; ++j) bs.push_back(anywhere(rng, grid));
  return IntervalBigraphRep(std::move(as), std::move(bs));
}

Digraph random_digraph(int n, double arc_probability, double loop_probability, Rng& rng) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (!(arc_probability >= 0 && arc_probability <= 1) ||
      !(loop_probability >= 0 && loop_probability <= 1)) {
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  }
  std::bernoulli_distribution arc(arc_probability), loop(loop_probability);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v ? loop(rng) : arc(rng)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

SubdivisionMap random_subdivided(int n, double arc_probability, int k, Rng& rng) {
  return k_subdivision(random_digraph(n, arc_probability, 0.0, rng), k);
}

}  // namespace ivdg::gen
