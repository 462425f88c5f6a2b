#pragma once

#include <span>
#include <vector>

#include "ivdg/certificate.hpp"
#include "ivdg/graph.hpp"
#include "ivdg/kernel.hpp"
#include "ivdg/vertex_order.hpp"

namespace ivdg {

/// Longest weighted chains in the complement of the underlying graph,
/// oriented along the ordering. Under a DUF-ordering non-adjacency is
/// transitive forward, so chains are exactly the independent sets.
struct ChainDag {
  Ordering ordering;
  std::vector<Weight> value;  // best chain weight starting at position p
  std::vector<int> next;      // next position on that chain, or -1
};

ChainDag longest_chains(const Digraph& g, const Ordering& ord, std::span<const Weight> weights = {});

/// Maximum (weight) independent set of a DUF-ordered digraph. O(n^2).
/// Throws NotDufOrdered, InvalidOrdering, DimensionMismatch.
Certificate max_independent_duf(const Digraph& g, const Ordering& ord,
                                std::span<const Weight> weights = {});

}  // namespace ivdg
