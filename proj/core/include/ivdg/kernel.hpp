#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ivdg/certificate.hpp"
#include "ivdg/graph.hpp"
#include "ivdg/interval.hpp"
#include "ivdg/vertex_order.hpp"

namespace ivdg {

using Weight = std::int64_t;

enum class Objective { min, max };

std::string_view to_string(Objective objective);

/// z_0, ..., z_t: each z_i has the smallest r(S) among the vertices left
/// after deleting every earlier z_j together with its surviving in-neighbours.
struct ZSequence {
  std::vector<Vertex> vertices;
  /// removed[i] = |{z_i} ∪ N^-_{G_i}(z_i)|; these blocks partition V.
  std::vector<int> removed;
};

/// O(n log n) (one sort, then linear). Throws NotReflexive.
ZSequence z_sequence(const NormalizedRep& rep);

/// A kernel of a reflexive interval digraph; one always exists.
/// The returned certificate is unchecked. Throws NotReflexive.
Certificate kernel_linear(const NormalizedRep& rep);

/// Right-to-left table over the ordering: entry p describes K(p), the best
/// kernel of G[p, n) that contains the vertex at position p.
struct KernelTable {
  struct Entry {
    bool defined = false;
    Weight value = 0;  // total weight of K(p); cardinality when unweighted
    int size = 0;
    int next = -1;     // position of the chosen element of P_p, or -1
  };

  Ordering ordering;
  std::vector<Entry> entries;
  Objective objective = Objective::min;

  /// Vertices of K(p) (original ids) by following successor links.
  std::vector<Vertex> materialize(int position) const;
};

/// Fills the K table for a DUF-ordered digraph. Weights, when non-empty,
/// must be non-negative and one per vertex. Throws NotDufOrdered,
/// InvalidOrdering, DimensionMismatch. O((n + m) n).
KernelTable build_kernel_table(const Digraph& g, const Ordering& ord, Objective objective,
                               std::span<const Weight> weights = {});

/// Minimum or maximum (weight) kernel of a DUF-digraph, or nullopt when
/// the digraph has no kernel. Ties go to the smallest position.
std::optional<Certificate> optimal_kernel_duf(const Digraph& g, const Ordering& ord,
                                              Objective objective,
                                              std::span<const Weight> weights = {});

/// O(n^2) variant for adjusted representations. Throws NotAdjusted.
std::optional<Certificate> optimal_kernel_adjusted(const NormalizedRep& rep, Objective objective);

/// Minimum independent dominating set of a cocomparability graph given an
/// umbrella-free ordering. Throws NotCocompOrdered.
Certificate min_independent_dominating_cocomp(const UndirectedGraph& h, const Ordering& ord);

}  // namespace ivdg
