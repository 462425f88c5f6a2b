#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <span>

#include "ivdg/certificate.hpp"
#include "ivdg/domination.hpp"
#include "ivdg/graph.hpp"
#include "ivdg/kernel.hpp"
#include "ivdg/ordering.hpp"
#include "ivdg/point_point.hpp"
#include "ivdg/vertex_order.hpp"

// Brute-force references. They share no code path with the optimizers they
// certify and refuse inputs beyond their budget instead of degrading.
namespace ivdg::oracle {

struct OracleBudget {
  int subset_n = 16;
  int permutation_n = 8;
  int k33_n = 30;
  std::optional<std::chrono::milliseconds> time_cap;
};

enum class KernelQuery { exists, min, max };

/// Backtracking over independent sets, filtered by absorption. Weighted
/// min/max when weights are given. nullopt = no kernel.
std::optional<Certificate> brute_kernel(const Digraph& g, KernelQuery query,
                                        std::span<const Weight> weights = {},
                                        const OracleBudget& budget = {});

/// Minimum absorbing set, by increasing cardinality.
Certificate brute_min_absorbing(const Digraph& g, const OracleBudget& budget = {});

/// Minimum dominating set (absorbing set of the reversal).
Certificate brute_min_dominating(const Digraph& g, const OracleBudget& budget = {});

/// Maximum-weight independent set by branch and bound.
Certificate brute_max_independent(const Digraph& g, std::span<const Weight> weights = {},
                                  const OracleBudget& budget = {});

/// Minimum A-dominating subset of B (B-indices), by increasing cardinality.
std::optional<Certificate> brute_red_blue(const Bigraph& bg, const OracleBudget& budget = {});
std::optional<Certificate> brute_red_blue(const IntervalBigraphRep& rep,
                                          const OracleBudget& budget = {});

struct K33Witness {
  std::array<Vertex, 3> left;
  std::array<Vertex, 3> right;
};

/// Exhaustive search for an induced K_{3,3}.
std::optional<K33Witness> find_induced_k33(const UndirectedGraph& h,
                                           const OracleBudget& budget = {});

enum class OrderingKind { duf, reflexive_interval };

/// Tries all n! orderings. For reflexive_interval a digraph without all
/// loops has no valid ordering.
std::optional<Ordering> brute_ordering_search(const Digraph& g, OrderingKind kind,
                                              const OracleBudget& budget = {});

/// Plain quadruple scan over the structures i..vi (lexicographically least
/// by positions).
std::optional<StructureWitness> brute_forbidden_structure(const Digraph& g, const Ordering& ord,
                                                          const OracleBudget& budget = {});

/// All quadruples (a, b, c, d).
std::optional<AntiWalkWitness> brute_anti_directed_walk(const Digraph& g,
                                                        const OracleBudget& budget = {});

}  // namespace ivdg::oracle
