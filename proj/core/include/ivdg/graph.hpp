#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_set>
#include <vector>

namespace ivdg {

using Vertex = int;

struct Arc {
  Vertex from;
  Vertex to;
  auto operator<=>(const Arc&) const = default;
};

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Directed graph on vertices 0..n-1.
///
/// Self-loops are kept as per-vertex flags: they never appear in the
/// adjacency lists and are not counted by edge_count(). Adjacency lists are
/// sorted ascending. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  /// Arcs with from == to become loops; duplicates are merged.
  /// Throws InvalidVertex for endpoints outside [0, n).
  Digraph(int n, std::span<const Arc> arcs);
  Digraph(int n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  int vertex_count() const noexcept { return n_; }
  /// Number of non-loop arcs.
  std::size_t edge_count() const noexcept { return out_.size(); }
  std::size_t loop_count() const noexcept;

  std::span<const Vertex> out_neighbours(Vertex u) const;
  std::span<const Vertex> in_neighbours(Vertex u) const;

  bool has_loop(Vertex u) const { return loops_[static_cast<std::size_t>(u)] != 0; }
  /// (u, u) queries the loop flag.
  bool has_edge(Vertex u, Vertex v) const;
  /// Adjacent in either direction; loops ignored.
  bool adjacent(Vertex u, Vertex v) const {
    return u != v && (has_edge(u, v) || has_edge(v, u));
  }

  bool is_reflexive() const noexcept;
  bool is_irreflexive() const noexcept;

  /// All arcs including loops as (u, u), sorted.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  static std::uint64_t key(Vertex u, Vertex v) noexcept {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  int n_ = 0;
  std::vector<std::size_t> out_offset_{0};
  std::vector<std::size_t> in_offset_{0};
  std::vector<Vertex> out_;
  std::vector<Vertex> in_;
  std::vector<char> loops_;
  std::unordered_set<std::uint64_t> index_;
};

/// Simple undirected graph on vertices 0..n-1 (no loops).
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);
  /// Throws InvalidVertex for bad endpoints and InvalidEdge for loops.
  UndirectedGraph(int n, std::span<const Edge> edges);
  UndirectedGraph(int n, std::initializer_list<Edge> edges)
      : UndirectedGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return adj_.size() / 2; }
  std::span<const Vertex> neighbours(Vertex u) const;
  bool has_edge(Vertex u, Vertex v) const;
  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b);

 private:
  int n_ = 0;
  std::vector<std::size_t> offset_{0};
  std::vector<Vertex> adj_;
  std::unordered_set<std::uint64_t> index_;
};

struct InducedSubgraph {
  Digraph graph;
  /// new id -> original id (ascending original ids).
  std::vector<Vertex> to_original;
  /// original id -> new id, or -1 if not kept.
  std::vector<Vertex> from_original;
};

Digraph reverse(const Digraph& g);
/// Duplicates in `keep` are ignored. Throws InvalidVertex.
InducedSubgraph induced_subgraph(const Digraph& g, std::span<const Vertex> keep);
UndirectedGraph underlying_undirected(const Digraph& g);
Digraph symmetric_digraph(const UndirectedGraph& h);

}  // namespace ivdg
