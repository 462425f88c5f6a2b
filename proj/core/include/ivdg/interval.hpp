#pragma once

#include <array>
#include <span>
#include <vector>

#include "ivdg/graph.hpp"
#include "ivdg/rational.hpp"
#include "ivdg/vertex_order.hpp"

namespace ivdg {

/// Closed interval [lo, hi]; lo == hi is a point.
struct Interval {
  Rational lo;
  Rational hi;

  bool intersects(const Interval& other) const noexcept {
    return lo <= other.hi && other.lo <= hi;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// (S_u, T_u) for one vertex: arc (u, v) exists iff S_u meets T_v.
struct IntervalPair {
  Interval source;
  Interval target;
  friend bool operator==(const IntervalPair&, const IntervalPair&) = default;
};

/// Interval representation of a digraph.
class IntervalRep {
 public:
  IntervalRep() = default;
  /// Throws MalformedInterval if some lo > hi.
  explicit IntervalRep(std::vector<IntervalPair> pairs);

  int vertex_count() const noexcept { return static_cast<int>(pairs_.size()); }
  const IntervalPair& operator[](Vertex v) const { return pairs_[static_cast<std::size_t>(v)]; }
  std::span<const IntervalPair> pairs() const noexcept { return pairs_; }
  /// l(S_u) == l(T_u) for every u.
  bool adjusted() const noexcept { return adjusted_; }

  friend bool operator==(const IntervalRep&, const IntervalRep&) = default;

 private:
  std::vector<IntervalPair> pairs_;
  bool adjusted_ = true;
};

enum class EndpointSide : unsigned char { left, right };
enum class IntervalKind : unsigned char { source, target };

struct EndpointEvent {
  Vertex vertex;
  IntervalKind kind;
  EndpointSide side;
  friend bool operator==(const EndpointEvent&, const EndpointEvent&) = default;
};

/// A representation whose 4n endpoints are the distinct integers 0..4n-1.
///
/// Only produced by normalize() (or derived from another NormalizedRep), so
/// the distinctness invariant holds by construction.
class NormalizedRep {
 public:
  NormalizedRep() = default;

  int vertex_count() const noexcept { return static_cast<int>(ends_.size()); }
  int l_source(Vertex v) const { return ends_[static_cast<std::size_t>(v)][0]; }
  int r_source(Vertex v) const { return ends_[static_cast<std::size_t>(v)][1]; }
  int l_target(Vertex v) const { return ends_[static_cast<std::size_t>(v)][2]; }
  int r_target(Vertex v) const { return ends_[static_cast<std::size_t>(v)][3]; }

  /// S_u meets T_v.
  bool has_arc(Vertex u, Vertex v) const {
    return l_source(u) <= r_target(v) && l_target(v) <= r_source(u);
  }

  /// Whether the representation this one was normalized from was adjusted.
  /// Normalization separates the shared left end-points, so the flags are kept.
  bool adjusted() const noexcept;
  bool adjusted(Vertex v) const { return adjusted_[static_cast<std::size_t>(v)] != 0; }

  /// Endpoints in increasing order; events()[k] has value k.
  std::span<const EndpointEvent> events() const noexcept { return events_; }

  IntervalRep to_rep() const;

 private:
  friend NormalizedRep normalize(const IntervalRep& rep);
  friend NormalizedRep reversed(const NormalizedRep& rep);
  friend NormalizedRep restrict_to(const NormalizedRep& rep, std::span<const Vertex> keep);

  std::vector<std::array<int, 4>> ends_;
  std::vector<EndpointEvent> events_;
  std::vector<char> adjusted_;
};

/// Replaces endpoints by their ranks under the event order: coordinate,
/// then left end-points before right end-points, then vertex id, then S
/// before T. Closed-interval intersections are preserved exactly.
NormalizedRep normalize(const IntervalRep& rep);

Digraph realize_digraph(const IntervalRep& rep);
Digraph realize_digraph(const NormalizedRep& rep);

/// Exact equality of realized arcs and loops with g. Throws DimensionMismatch.
bool verify_representation(const IntervalRep& rep, const Digraph& g);

bool is_reflexive(const IntervalRep& rep);
bool is_reflexive(const NormalizedRep& rep);

/// Representation of the reversal (S and T swapped per vertex).
IntervalRep reversed(const IntervalRep& rep);
NormalizedRep reversed(const NormalizedRep& rep);

/// Representation of the induced subdigraph on `keep`, relabelled in
/// ascending original-id order (matching induced_subgraph()).
IntervalRep restrict_to(const IntervalRep& rep, std::span<const Vertex> keep);
NormalizedRep restrict_to(const NormalizedRep& rep, std::span<const Vertex> keep);

/// Orders vertices by the left end-point of S_v ∩ T_v. Throws NotReflexive.
Ordering extract_duf_ordering(const NormalizedRep& rep);

}  // namespace ivdg
