#include "ivdg/point_point.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ivdg/error.hpp"

namespace ivdg {
namespace {

// Out- or in-neighbours with the loop merged in, ascending.
std::vector<Vertex> with_loop(const Digraph& g, Vertex u, bool out) {
  auto nbrs = out ? g.out_neighbours(u) : g.in_neighbours(u);
  std::vector<Vertex> result(nbrs.begin(), nbrs.end());
  if (g.has_loop(u)) result.insert(std::lower_bound(result.begin(), result.end(), u), u);
  return result;
}

struct Components {
  std::vector<int> id;  // node -> component, ids ordered by smallest node
  int count = 0;
};

// Splitting bigraph nodes: x_u = u, y_u = n + u.
Components label(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(2 * static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Arc& a : g.arcs()) {
    int r1 = find(a.from), r2 = find(n + a.to);
    if (r1 != r2) parent[static_cast<std::size_t>(std::max(r1, r2))] = std::min(r1, r2);
  }
  // Roots are the smallest node of their component, so scanning nodes in
  // order numbers components by smallest node id.
  Components c;
  c.id.assign(2 * static_cast<std::size_t>(n), -1);
  for (int x = 0; x < 2 * n; ++x) {
    int r = find(x);
    if (r == x) c.id[static_cast<std::size_t>(x)] = c.count++;
    else c.id[static_cast<std::size_t>(x)] = c.id[static_cast<std::size_t>(r)];
  }
  return c;
}

}  // namespace

bool is_anti_directed_walk(const Digraph& g, const AntiWalkWitness& w) {
  const int n = g.vertex_count();
  for (Vertex v : {w.a, w.b, w.c, w.d}) {
    if (v < 0 || v >= n) return false;
  }
  return g.has_edge(w.a, w.b) && g.has_edge(w.c, w.b) && g.has_edge(w.c, w.d) &&
         !g.has_edge(w.a, w.d);
}

Digraph realize_digraph(const PointRep& rep) {
  if (rep.source.size() != rep.target.size()) {
    throw DimensionMismatch(rep.source.size(), rep.target.size());
  }
  const int n = static_cast<int>(rep.source.size());
  std::unordered_map<int, std::vector<Vertex>> by_target;
  for (Vertex v = 0; v < n; ++v) by_target[rep.target[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    auto it = by_target.find(rep.source[static_cast<std::size_t>(u)]);
    if (it == by_target.end()) continue;
    for (Vertex v : it->second) arcs.push_back({u, v});
  }
  return Digraph(n, arcs);
}

std::variant<PointRep, AntiWalkWitness> recognize_point_point(const Digraph& g) {
  const int n = g.vertex_count();
  Components comp = label(g);
  std::vector<long long> xs(static_cast<std::size_t>(comp.count), 0);
  std::vector<long long> ys(static_cast<std::size_t>(comp.count), 0);
  std::vector<long long> edges(static_cast<std::size_t>(comp.count), 0);
  for (int u = 0; u < n; ++u) {
    ++xs[static_cast<std::size_t>(comp.id[static_cast<std::size_t>(u)])];
    ++ys[static_cast<std::size_t>(comp.id[static_cast<std::size_t>(n + u)])];
  }
  for (const Arc& a : g.arcs()) ++edges[static_cast<std::size_t>(comp.id[static_cast<std::size_t>(a.from)])];

  int failing = -1;
  for (int c = 0; c < comp.count && failing < 0; ++c) {
    if (edges[static_cast<std::size_t>(c)] != xs[static_cast<std::size_t>(c)] * ys[static_cast<std::size_t>(c)]) {
      failing = c;
    }
  }
  if (failing < 0) {
    PointRep rep;
    rep.source.assign(comp.id.begin(), comp.id.begin() + n);
    rep.target.assign(comp.id.begin() + n, comp.id.end());
    return rep;
  }

  for (Vertex a = 0; a < n; ++a) {
    if (comp.id[static_cast<std::size_t>(a)] != failing) continue;
    for (Vertex b : with_loop(g, a, true)) {
      for (Vertex c : with_loop(g, b, false)) {
        for (Vertex d : with_loop(g, c, true)) {
          if (!g.has_edge(a, d)) return AntiWalkWitness{a, b, c, d};
        }
      }
    }
  }
  throw std::logic_error("incomplete component without an anti-directed walk");
}

std::optional<AntiWalkWitness> find_anti_directed_walk(const Digraph& g) {
  auto result = recognize_point_point(g);
  if (auto* w = std::get_if<AntiWalkWitness>(&result)) return *w;
  return std::nullopt;
}

Vertex SubdivisionMap::path_vertex(std::size_t arc_index, int t) const {
  if (arc_index >= arcs.size() || t < 1 || t > k) {
    throw std::out_of_range("no such subdivision vertex");
  }
  return origin.vertex_count() + static_cast<Vertex>(arc_index) * k + (t - 1);
}

SubdivisionMap k_subdivision(const Digraph& g, int k) {
  if (k < 1) throw std::invalid_argument("subdivision length must be at least 1");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.has_loop(v)) throw NotIrreflexive(v);
  }
  SubdivisionMap map;
  map.origin = g;
  map.k = k;
  map.arcs = g.arcs();
  const int n = g.vertex_count();
  const int host_n = n + k * static_cast<int>(map.arcs.size());
  std::vector<Arc> host_arcs;
  host_arcs.reserve(static_cast<std::size_t>(k + 1) * map.arcs.size());
  for (std::size_t e = 0; e < map.arcs.size(); ++e) {
    Vertex prev = map.arcs[e].from;
    for (int t = 1; t <= k; ++t) {
      Vertex u = map.path_vertex(e, t);
      host_arcs.push_back({prev, u});
      prev = u;
    }
    host_arcs.push_back({prev, map.arcs[e].to});
  }
  map.host = Digraph(host_n, host_arcs);
  return map;
}

namespace {

void require_liftable(const SubdivisionMap& map, SetMode mode) {
  if (map.k % 2 != 0) throw OddSubdivision(map.k);
  if (mode != SetMode::kernel && mode != SetMode::absorbing) {
    throw InvalidCertificate("lift/project support kernel and absorbing sets only");
  }
}

void require_valid(const Digraph& g, std::span<const Vertex> s, SetMode mode, const char* where) {
  if (!verify_set(g, s, mode).holds(mode)) {
    throw InvalidCertificate(std::string(where) + " set is not " + std::string(to_string(mode)));
  }
}

}  // namespace

std::vector<Vertex> lift_set(const SubdivisionMap& map, std::span<const Vertex> s, SetMode mode) {
  require_liftable(map, mode);
  require_valid(map.origin, s, mode, "origin");
  std::vector<char> in(static_cast<std::size_t>(map.origin.vertex_count()), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> out(s.begin(), s.end());
  for (std::size_t e = 0; e < map.arcs.size(); ++e) {
    int first = in[static_cast<std::size_t>(map.arcs[e].to)] ? 1 : 2;
    for (int t = first; t <= map.k; t += 2) out.push_back(map.path_vertex(e, t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> project_set(const SubdivisionMap& map, std::span<const Vertex> s, SetMode mode) {
  require_liftable(map, mode);
  require_valid(map.host, s, mode, "host");
  const int n = map.origin.vertex_count();
  std::vector<char> in(static_cast<std::size_t>(map.host.vertex_count()), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  if (mode == SetMode::absorbing) {
    for (std::size_t e = 0; e < map.arcs.size(); ++e) {
      int chosen = 0;
      for (int t = 1; t <= map.k; ++t) chosen += in[static_cast<std::size_t>(map.path_vertex(e, t))];
      if (chosen <= map.k / 2) continue;
      for (int t = 1; t <= map.k; ++t) in[static_cast<std::size_t>(map.path_vertex(e, t))] = t % 2;
      in[static_cast<std::size_t>(map.arcs[e].to)] = 1;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (in[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

}  // namespace ivdg
