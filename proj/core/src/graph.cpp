#include "ivdg/graph.hpp"

#include <algorithm>

#include "ivdg/error.hpp"

namespace ivdg {
namespace {

void check_vertex(Vertex v, int n) {
  if (v < 0 || v >= n) throw InvalidVertex(v);
}

// Counting-sort style CSR build from (row, col) pairs already deduplicated.
void build_csr(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs,
               std::vector<std::size_t>& offset, std::vector<Vertex>& targets) {
  offset.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [r, c] : pairs) ++offset[static_cast<std::size_t>(r) + 1];
  for (std::size_t i = 1; i < offset.size(); ++i) offset[i] += offset[i - 1];
  targets.resize(pairs.size());
  std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
  for (auto [r, c] : pairs) targets[fill[static_cast<std::size_t>(r)]++] = c;
  for (int r = 0; r < n; ++r) {
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(r)]),
              targets.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(r) + 1]));
  }
}

}  // namespace

Digraph::Digraph(int n) : n_(n), loops_(static_cast<std::size_t>(n), 0) {
  if (n < 0) throw InvalidVertex(n);
  out_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  in_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  std::vector<std::pair<Vertex, Vertex>> fwd;
  fwd.reserve(arcs.size());
  index_.reserve(arcs.size());
  for (const Arc& a : arcs) {
    check_vertex(a.from, n);
    check_vertex(a.to, n);
    if (a.from == a.to) {
      loops_[static_cast<std::size_t>(a.from)] = 1;
      continue;
    }
    if (index_.insert(key(a.from, a.to)).second) fwd.emplace_back(a.from, a.to);
  }
  build_csr(n, fwd, out_offset_, out_);
  for (auto& [u, v] : fwd) std::swap(u, v);
  build_csr(n, fwd, in_offset_, in_);
}

std::size_t Digraph::loop_count() const noexcept {
  return static_cast<std::size_t>(std::count(loops_.begin(), loops_.end(), 1));
}

std::span<const Vertex> Digraph::out_neighbours(Vertex u) const {
  auto i = static_cast<std::size_t>(u);
  return {out_.data() + out_offset_[i], out_offset_[i + 1] - out_offset_[i]};
}

std::span<const Vertex> Digraph::in_neighbours(Vertex u) const {
  auto i = static_cast<std::size_t>(u);
  return {in_.data() + in_offset_[i], in_offset_[i + 1] - in_offset_[i]};
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  if (u == v) return has_loop(u);
  return index_.contains(key(u, v));
}

bool Digraph::is_reflexive() const noexcept {
  return std::all_of(loops_.begin(), loops_.end(), [](char c) { return c != 0; });
}

bool Digraph::is_irreflexive() const noexcept {
  return std::none_of(loops_.begin(), loops_.end(), [](char c) { return c != 0; });
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(out_.size() + loop_count());
  for (Vertex u = 0; u < n_; ++u) {
    bool loop_done = !has_loop(u);
    for (Vertex v : out_neighbours(u)) {
      if (!loop_done && v > u) {
        result.push_back({u, u});
        loop_done = true;
      }
      result.push_back({u, v});
    }
    if (!loop_done) result.push_back({u, u});
  }
  return result;
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.n_ == b.n_ && a.loops_ == b.loops_ && a.out_offset_ == b.out_offset_ &&
         a.out_ == b.out_;
}

UndirectedGraph::UndirectedGraph(int n) : n_(n) {
  if (n < 0) throw InvalidVertex(n);
  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
}

UndirectedGraph::UndirectedGraph(int n, std::span<const Edge> edges) : UndirectedGraph(n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    check_vertex(e.u, n);
    check_vertex(e.v, n);
    if (e.u == e.v) throw InvalidEdge("undirected graphs have no loops");
    Vertex lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    auto k = (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
    if (index_.insert(k).second) {
      pairs.emplace_back(lo, hi);
      pairs.emplace_back(hi, lo);
    }
  }
  build_csr(n, pairs, offset_, adj_);
}

std::span<const Vertex> UndirectedGraph::neighbours(Vertex u) const {
  auto i = static_cast<std::size_t>(u);
  return {adj_.data() + offset_[i], offset_[i + 1] - offset_[i]};
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u == v) return false;
  Vertex lo = std::min(u, v), hi = std::max(u, v);
  return index_.contains((static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi));
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbours(u)) {
      if (u < v) result.push_back({u, v});
    }
  }
  return result;
}

bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
  return a.n_ == b.n_ && a.offset_ == b.offset_ && a.adj_ == b.adj_;
}

Digraph reverse(const Digraph& g) {
  std::vector<Arc> arcs = g.arcs();
  for (Arc& a : arcs) std::swap(a.from, a.to);
  return Digraph(g.vertex_count(), arcs);
}

InducedSubgraph induced_subgraph(const Digraph& g, std::span<const Vertex> keep) {
  const int n = g.vertex_count();
  InducedSubgraph result;
  result.from_original.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v : keep) {
    check_vertex(v, n);
    result.from_original[static_cast<std::size_t>(v)] = 0;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (result.from_original[static_cast<std::size_t>(v)] == 0) {
      result.from_original[static_cast<std::size_t>(v)] =
          static_cast<Vertex>(result.to_original.size());
      result.to_original.push_back(v);
    }
  }
  std::vector<Arc> arcs;
  for (Vertex v : result.to_original) {
    Vertex nv = result.from_original[static_cast<std::size_t>(v)];
    if (g.has_loop(v)) arcs.push_back({nv, nv});
    for (Vertex w : g.out_neighbours(v)) {
      Vertex nw = result.from_original[static_cast<std::size_t>(w)];
      if (nw >= 0) arcs.push_back({nv, nw});
    }
  }
  result.graph = Digraph(static_cast<int>(result.to_original.size()), arcs);
  return result;
}

UndirectedGraph underlying_undirected(const Digraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.out_neighbours(u)) edges.push_back({u, v});
  }
  return UndirectedGraph(g.vertex_count(), edges);
}

Digraph symmetric_digraph(const UndirectedGraph& h) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * h.edge_count());
  for (const Edge& e : h.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(h.vertex_count(), arcs);
}

}  // namespace ivdg
