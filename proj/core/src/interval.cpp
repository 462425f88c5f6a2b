#include "ivdg/interval.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ivdg/error.hpp"

namespace ivdg {
namespace {

bool pair_adjusted(const IntervalPair& p) { return p.source.lo == p.target.lo; }

std::vector<char> keep_mask(int n, std::span<const Vertex> keep) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : keep) {
    if (v < 0 || v >= n) throw InvalidVertex(v);
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

// Endpoint slots inside NormalizedRep::ends_.
constexpr std::size_t slot(IntervalKind kind, EndpointSide side) {
  return (kind == IntervalKind::source ? 0 : 2) + (side == EndpointSide::left ? 0 : 1);
}

}  // namespace

IntervalRep::IntervalRep(std::vector<IntervalPair> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t v = 0; v < pairs_.size(); ++v) {
    const auto& p = pairs_[v];
    if (p.source.lo > p.source.hi || p.target.lo > p.target.hi) {
      throw MalformedInterval(static_cast<long long>(v));
    }
  }
  adjusted_ = std::all_of(pairs_.begin(), pairs_.end(), pair_adjusted);
}

NormalizedRep normalize(const IntervalRep& rep) {
  struct Key {
    Rational coord;
    EndpointEvent event;
  };
  const int n = rep.vertex_count();
  std::vector<Key> keys;
  keys.reserve(4 * static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto& p = rep[v];
    keys.push_back({p.source.lo, {v, IntervalKind::source, EndpointSide::left}});
    keys.push_back({p.source.hi, {v, IntervalKind::source, EndpointSide::right}});
    keys.push_back({p.target.lo, {v, IntervalKind::target, EndpointSide::left}});
    keys.push_back({p.target.hi, {v, IntervalKind::target, EndpointSide::right}});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.coord != b.coord) return a.coord < b.coord;
    return std::tie(a.event.side, a.event.vertex, a.event.kind) <
           std::tie(b.event.side, b.event.vertex, b.event.kind);
  });

  NormalizedRep out;
  out.ends_.assign(static_cast<std::size_t>(n), {0, 0, 0, 0});
  out.events_.reserve(keys.size());
  for (std::size_t rank = 0; rank < keys.size(); ++rank) {
    const auto& e = keys[rank].event;
    out.ends_[static_cast<std::size_t>(e.vertex)][slot(e.kind, e.side)] = static_cast<int>(rank);
    out.events_.push_back(e);
  }
  out.adjusted_.reserve(static_cast<std::size_t>(n));
  for (const auto& p : rep.pairs()) out.adjusted_.push_back(pair_adjusted(p) ? 1 : 0);
  return out;
}

bool NormalizedRep::adjusted() const noexcept {
  return std::all_of(adjusted_.begin(), adjusted_.end(), [](char c) { return c != 0; });
}

IntervalRep NormalizedRep::to_rep() const {
  std::vector<IntervalPair> pairs;
  pairs.reserve(ends_.size());
  for (const auto& e : ends_) {
    pairs.push_back({{Rational(e[0]), Rational(e[1])}, {Rational(e[2]), Rational(e[3])}});
  }
  return IntervalRep(std::move(pairs));
}

namespace {

// Each arc is found from the interval whose left end-point comes first, by
// scanning the other kind's intervals sorted by left end-point. O(n log n + m).
template <class LS, class RS, class LT, class RT>
Digraph sweep(int n, LS ls, RS rs, LT lt, RT rt) {
  std::vector<Arc> arcs;
  std::vector<Vertex> by_ls(static_cast<std::size_t>(n)), by_lt(static_cast<std::size_t>(n));
  std::iota(by_ls.begin(), by_ls.end(), 0);
  std::iota(by_lt.begin(), by_lt.end(), 0);
  std::sort(by_ls.begin(), by_ls.end(), [&](Vertex a, Vertex b) { return ls(a) < ls(b); });
  std::sort(by_lt.begin(), by_lt.end(), [&](Vertex a, Vertex b) { return lt(a) < lt(b); });
  // S_u meets T_v iff max(l(S_u), l(T_v)) <= min(r(S_u), r(T_v)). Split on
  // which left end-point is larger; ties go to case A.
  // Case A: l(S_u) <= l(T_v) and l(T_v) <= r(S_u).
  for (Vertex u = 0; u < n; ++u) {
    auto lo = std::lower_bound(by_lt.begin(), by_lt.end(), u,
                               [&](Vertex v, Vertex) { return lt(v) < ls(u); });
    for (auto it = lo; it != by_lt.end() && !(rs(u) < lt(*it)); ++it) arcs.push_back({u, *it});
  }
  // Case B: l(T_v) < l(S_u) and l(S_u) <= r(T_v).
  for (Vertex v = 0; v < n; ++v) {
    auto lo = std::upper_bound(by_ls.begin(), by_ls.end(), v,
                               [&](Vertex, Vertex u) { return lt(v) < ls(u); });
    for (auto it = lo; it != by_ls.end() && !(rt(v) < ls(*it)); ++it) arcs.push_back({*it, v});
  }
  return Digraph(n, arcs);
}

}  // namespace

Digraph realize_digraph(const IntervalRep& rep) {
  return sweep(
      rep.vertex_count(), [&](Vertex v) -> const Rational& { return rep[v].source.lo; },
      [&](Vertex v) -> const Rational& { return rep[v].source.hi; },
      [&](Vertex v) -> const Rational& { return rep[v].target.lo; },
      [&](Vertex v) -> const Rational& { return rep[v].target.hi; });
}

Digraph realize_digraph(const NormalizedRep& rep) {
  return sweep(
      rep.vertex_count(), [&](Vertex v) { return rep.l_source(v); },
      [&](Vertex v) { return rep.r_source(v); }, [&](Vertex v) { return rep.l_target(v); },
      [&](Vertex v) { return rep.r_target(v); });
}

bool verify_representation(const IntervalRep& rep, const Digraph& g) {
  if (rep.vertex_count() != g.vertex_count()) {
    throw DimensionMismatch(static_cast<std::size_t>(g.vertex_count()),
                            static_cast<std::size_t>(rep.vertex_count()));
  }
  return realize_digraph(rep) == g;
}

bool is_reflexive(const IntervalRep& rep) {
  return std::all_of(rep.pairs().begin(), rep.pairs().end(),
                     [](const IntervalPair& p) { return p.source.intersects(p.target); });
}

bool is_reflexive(const NormalizedRep& rep) {
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    if (!rep.has_arc(v, v)) return false;
  }
  return true;
}

IntervalRep reversed(const IntervalRep& rep) {
  std::vector<IntervalPair> pairs;
  pairs.reserve(static_cast<std::size_t>(rep.vertex_count()));
  for (const auto& p : rep.pairs()) pairs.push_back({p.target, p.source});
  return IntervalRep(std::move(pairs));
}

NormalizedRep reversed(const NormalizedRep& rep) {
  NormalizedRep out = rep;
  for (auto& e : out.ends_) e = {e[2], e[3], e[0], e[1]};
  for (auto& ev : out.events_) {
    ev.kind = ev.kind == IntervalKind::source ? IntervalKind::target : IntervalKind::source;
  }
  return out;
}

IntervalRep restrict_to(const IntervalRep& rep, std::span<const Vertex> keep) {
  auto mask = keep_mask(rep.vertex_count(), keep);
  std::vector<IntervalPair> pairs;
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    if (mask[static_cast<std::size_t>(v)]) pairs.push_back(rep[v]);
  }
  return IntervalRep(std::move(pairs));
}

NormalizedRep restrict_to(const NormalizedRep& rep, std::span<const Vertex> keep) {
  const int n = rep.vertex_count();
  auto mask = keep_mask(n, keep);
  std::vector<Vertex> relabel(static_cast<std::size_t>(n), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (mask[static_cast<std::size_t>(v)]) relabel[static_cast<std::size_t>(v)] = next++;
  }
  NormalizedRep out;
  out.ends_.assign(static_cast<std::size_t>(next), {0, 0, 0, 0});
  out.adjusted_.assign(static_cast<std::size_t>(next), 0);
  for (Vertex v = 0; v < n; ++v) {
    Vertex nv = relabel[static_cast<std::size_t>(v)];
    if (nv >= 0) out.adjusted_[static_cast<std::size_t>(nv)] = rep.adjusted_[static_cast<std::size_t>(v)];
  }
  for (const auto& e : rep.events_) {
    Vertex nv = relabel[static_cast<std::size_t>(e.vertex)];
    if (nv < 0) continue;
    out.ends_[static_cast<std::size_t>(nv)][slot(e.kind, e.side)] =
        static_cast<int>(out.events_.size());
    out.events_.push_back({nv, e.kind, e.side});
  }
  return out;
}

Ordering extract_duf_ordering(const NormalizedRep& rep) {
  const int n = rep.vertex_count();
  std::vector<int> x(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (!rep.has_arc(v, v)) throw NotReflexive(v);
    x[static_cast<std::size_t>(v)] = std::max(rep.l_source(v), rep.l_target(v));
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) {
    return x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)];
  });
  return Ordering(std::move(perm), OrderingRole::reflexive_interval);
}

}  // namespace ivdg
