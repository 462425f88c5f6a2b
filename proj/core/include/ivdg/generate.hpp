#pragma once

#include <cstdint>
#include <random>

#include "ivdg/domination.hpp"
#include "ivdg/graph.hpp"
#include "ivdg/interval.hpp"
#include "ivdg/point_point.hpp"

namespace ivdg::gen {

using Rng = std::mt19937_64;

struct ReflexiveParams {
  int n = 10;
  /// Maximum extent of an interval on either side of its anchor; 0 means
  /// unrestricted (anywhere in the grid [0, 4n]).
  int span = 0;
};

/// Integer intervals on [0, 4n]; S_u and T_u share an anchor point.
IntervalRep random_reflexive_rep(const ReflexiveParams& params, Rng& rng);

/// Common left end-point per vertex.
IntervalRep random_adjusted_rep(const ReflexiveParams& params, Rng& rng);

/// Arbitrary interval pairs on a grid of `grid` + 1 points (ties likely).
IntervalRep random_interval_rep(int n, int grid, Rng& rng);

IntervalBigraphRep random_interval_bigraph(int a, int b, int grid, Rng& rng);

Digraph random_digraph(int n, double arc_probability, double loop_probability, Rng& rng);

SubdivisionMap random_subdivided(int n, double arc_probability, int k, Rng& rng);

}  // namespace ivdg::gen
