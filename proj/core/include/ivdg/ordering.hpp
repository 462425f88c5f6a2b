#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "ivdg/error.hpp"
#include "ivdg/graph.hpp"
#include "ivdg/interval.hpp"
#include "ivdg/vertex_order.hpp"

namespace ivdg {

/// Forbidden patterns for reflexive interval orderings. With a < b <= c < d
/// in the ordering (b == c allowed for i, ii, iv, v):
///   i    (a,d) in E;  (a,b), (c,d) not in E
///   ii   (a,d), (b,c) in E;  (a,c), (b,d) not in E
///   iii  (a,c), (b,d) in E;  (a,d), (b,c) not in E
///   iv..vi are i..iii with every arc reversed.
/// The DUF and umbrella kinds are triples i < j < k stored in vertices[0..2].
enum class StructureKind {
  i,
  ii,
  iii,
  iv,
  v,
  vi,
  duf_out,      // (i,k) in E, (i,j) and (j,k) not in E
  duf_in,       // (k,i) in E, (k,j) and (j,i) not in E
  umbrella,     // undirected: ik in E, ij and jk not in E
  unlocated,    // a violation exists but the search was skipped (large n)
};

std::string_view to_string(StructureKind kind);

struct StructureWitness {
  StructureKind kind;
  std::array<Vertex, 4> vertices{-1, -1, -1, -1};
  friend bool operator==(const StructureWitness&, const StructureWitness&) = default;
};

class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, StructureWitness w);
  const StructureWitness& witness() const noexcept { return witness_; }

 private:
  StructureWitness witness_;
};

class ForbiddenStructure : public WitnessError {
 public:
  explicit ForbiddenStructure(StructureWitness w)
      : WitnessError("ordering contains a forbidden structure", w) {}
};

class NotDufOrdered : public WitnessError {
 public:
  explicit NotDufOrdered(StructureWitness w)
      : WitnessError("ordering is not a DUF-ordering", w) {}
};

class NotCocompOrdered : public WitnessError {
 public:
  explicit NotCocompOrdered(StructureWitness w)
      : WitnessError("ordering is not umbrella-free", w) {}
};

/// Returns a DUF violation (kind duf_out or duf_in) or nullopt.
/// Scans every arc spanning two or more positions: O(n * m).
std::optional<StructureWitness> verify_duf_ordering(const Digraph& g, const Ordering& ord);

/// Interval pairs from a forbidden-structure-free ordering of a reflexive
/// digraph. Throws NotReflexive, InvalidOrdering, or ForbiddenStructure when
/// the constructed representation does not realize g.
IntervalRep build_representation(const Digraph& g, const Ordering& ord);

/// The construction above without the final check; O(n^2).
IntervalRep construct_representation(const Digraph& g, const Ordering& ord);

/// nullopt iff none of the structures i..vi occur. Decided by constructing a
/// representation and checking it; a witness (lexicographically least
/// quadruple of positions) is located only on failure and only for
/// n <= kWitnessSearchLimit, otherwise the kind is `unlocated`.
std::optional<StructureWitness> check_reflexive_interval_ordering(const Digraph& g,
                                                                  const Ordering& ord);

inline constexpr int kWitnessSearchLimit = 2000;

/// Lexicographically least forbidden quadruple, by direct search.
std::optional<StructureWitness> find_forbidden_structure(const Digraph& g, const Ordering& ord);

/// Umbrella-free check for undirected graphs; witness kind `umbrella`.
std::optional<StructureWitness> verify_cocomparability_ordering(const UndirectedGraph& h,
                                                                const Ordering& ord);

}  // namespace ivdg
