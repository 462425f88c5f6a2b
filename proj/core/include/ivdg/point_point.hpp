#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ivdg/certificate.hpp"
#include "ivdg/graph.hpp"

namespace ivdg {

/// Degenerate representation: arc (u, v) iff source[u] == target[v].
struct PointRep {
  std::vector<int> source;
  std::vector<int> target;
  friend bool operator==(const PointRep&, const PointRep&) = default;
};

/// (a,b), (c,b), (c,d) in E and (a,d) not in E.
struct AntiWalkWitness {
  Vertex a, b, c, d;
  friend bool operator==(const AntiWalkWitness&, const AntiWalkWitness&) = default;
};

bool is_anti_directed_walk(const Digraph& g, const AntiWalkWitness& w);

Digraph realize_digraph(const PointRep& rep);

/// Splitting-bigraph components: accepted iff every component is complete
/// bipartite. Points are component ids, numbered by smallest node id
/// (x_u = u, y_u = n + u). Linear on the accept path.
std::variant<PointRep, AntiWalkWitness> recognize_point_point(const Digraph& g);

std::optional<AntiWalkWitness> find_anti_directed_walk(const Digraph& g);

/// Host digraph of a k-subdivision and the path of each origin arc.
struct SubdivisionMap {
  Digraph origin;
  Digraph host;
  int k = 0;
  /// Origin arcs in sorted order; path e is host vertices
  /// n + e*k + 0 .. n + e*k + k-1 (u^1 .. u^k).
  std::vector<Arc> arcs;

  Vertex path_vertex(std::size_t arc_index, int t) const;  // t in 1..k
};

/// Replaces each arc (i, j) by the directed path i, u^1, ..., u^k, j.
/// Throws NotIrreflexive; k must be >= 1 (std::invalid_argument).
SubdivisionMap k_subdivision(const Digraph& g, int k);

/// Lifts a kernel/absorbing set of the origin into the host: per arc (i, j)
/// the even path positions when j is outside the set, the odd ones when j
/// is inside. Size |s| + (k/2) m. Throws OddSubdivision, InvalidCertificate.
std::vector<Vertex> lift_set(const SubdivisionMap& map, std::span<const Vertex> s, SetMode mode);

/// Projects a host kernel/absorbing set back to the origin. Absorbing sets
/// are first normalized: a path holding more than k/2 chosen vertices is
/// replaced by its odd positions plus its head j.
std::vector<Vertex> project_set(const SubdivisionMap& map, std::span<const Vertex> s,
                                SetMode mode);

}  // namespace ivdg
