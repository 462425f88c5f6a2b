#include "ivdg/domination.hpp"

#include <algorithm>
#include <numeric>

#include "ivdg/error.hpp"

namespace ivdg {
namespace {

template <class C>
struct Span {
  C lo;
  C hi;
};

template <class C>
struct Greedy {
  std::vector<int> order;
  std::vector<C> rho;
  std::vector<int> best;
  std::vector<std::optional<int>> lambda;
  std::vector<int> visited;
};

// Red-blue greedy over A sorted by right end-point. Returns nullopt when some
// A-interval meets no B-interval. O((|A| + |B|) log(|A| + |B|)).
template <class C>
std::optional<Greedy<C>> greedy(const std::vector<Span<C>>& a, const std::vector<Span<C>>& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  Greedy<C> s;
  s.order.resize(static_cast<std::size_t>(na));
  std::iota(s.order.begin(), s.order.end(), 0);
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    const auto& ix = a[static_cast<std::size_t>(x)];
    const auto& iy = a[static_cast<std::size_t>(y)];
    return ix.hi != iy.hi ? ix.hi < iy.hi : x < y;
  });

  // B sorted by left end-point with a running argmax of the right end-point.
  std::vector<int> b_by_left(static_cast<std::size_t>(nb));
  std::iota(b_by_left.begin(), b_by_left.end(), 0);
  std::sort(b_by_left.begin(), b_by_left.end(), [&](int x, int y) {
    const auto& jx = b[static_cast<std::size_t>(x)];
    const auto& jy = b[static_cast<std::size_t>(y)];
    return jx.lo != jy.lo ? jx.lo < jy.lo : x < y;
  });
  std::vector<int> prefix_arg(static_cast<std::size_t>(nb));
  for (int k = 0; k < nb; ++k) {
    int cand = b_by_left[static_cast<std::size_t>(k)];
    int cur = k == 0 ? cand : prefix_arg[static_cast<std::size_t>(k) - 1];
    const auto& jc = b[static_cast<std::size_t>(cand)];
    const auto& ju = b[static_cast<std::size_t>(cur)];
    if (jc.hi > ju.hi || (jc.hi == ju.hi && cand < cur)) cur = cand;
    prefix_arg[static_cast<std::size_t>(k)] = cur;
  }

  s.rho.reserve(static_cast<std::size_t>(na));
  s.best.reserve(static_cast<std::size_t>(na));
  for (int k = 0; k < na; ++k) {
    const auto& iv = a[static_cast<std::size_t>(s.order[static_cast<std::size_t>(k)])];
    auto end = std::upper_bound(b_by_left.begin(), b_by_left.end(), iv.hi, [&](const C& x, int j) {
      return x < b[static_cast<std::size_t>(j)].lo;
    });
    if (end == b_by_left.begin()) return std::nullopt;
    int arg = prefix_arg[static_cast<std::size_t>(end - b_by_left.begin() - 1)];
    if (b[static_cast<std::size_t>(arg)].hi < iv.lo) return std::nullopt;
    s.rho.push_back(b[static_cast<std::size_t>(arg)].hi);
    s.best.push_back(arg);
  }

  // A sorted by left end-point; suffix minimum of the right-end rank k.
  std::vector<int> rank(static_cast<std::size_t>(na));
  for (int k = 0; k < na; ++k) rank[static_cast<std::size_t>(s.order[static_cast<std::size_t>(k)])] = k;
  std::vector<int> a_by_left(static_cast<std::size_t>(na));
  std::iota(a_by_left.begin(), a_by_left.end(), 0);
  std::sort(a_by_left.begin(), a_by_left.end(), [&](int x, int y) {
    return a[static_cast<std::size_t>(x)].lo < a[static_cast<std::size_t>(y)].lo;
  });
  std::vector<int> suffix(static_cast<std::size_t>(na) + 1, na);
  for (int k = na - 1; k >= 0; --k) {
    suffix[static_cast<std::size_t>(k)] = std::min(
        suffix[static_cast<std::size_t>(k) + 1],
        rank[static_cast<std::size_t>(a_by_left[static_cast<std::size_t>(k)])]);
  }
  s.lambda.reserve(static_cast<std::size_t>(na));
  for (int k = 0; k < na; ++k) {
    auto first = std::upper_bound(a_by_left.begin(), a_by_left.end(), s.rho[static_cast<std::size_t>(k)],
                                  [&](const C& x, int i) { return x < a[static_cast<std::size_t>(i)].lo; });
    int m = suffix[static_cast<std::size_t>(first - a_by_left.begin())];
    s.lambda.push_back(m < na ? std::optional<int>(m) : std::nullopt);
  }

  for (int k = 0; na > 0;) {
    s.visited.push_back(k);
    auto next = s.lambda[static_cast<std::size_t>(k)];
    if (!next) break;
    k = *next;
  }
  return s;
}

template <class C>
std::vector<int> chosen(const Greedy<C>& s) {
  std::vector<int> out;
  for (int k : s.visited) out.push_back(s.best[static_cast<std::size_t>(k)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Span<Rational>> spans(const std::vector<Interval>& v) {
  std::vector<Span<Rational>> out;
  out.reserve(v.size());
  for (const Interval& i : v) out.push_back({i.lo, i.hi});
  return out;
}

}  // namespace

IntervalBigraphRep::IntervalBigraphRep(std::vector<Interval> a, std::vector<Interval> b)
    : a_(std::move(a)), b_(std::move(b)) {
  for (const auto* part : {&a_, &b_}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      if ((*part)[i].lo > (*part)[i].hi) throw MalformedInterval(static_cast<long long>(i));
    }
  }
}

bool IntervalBigraphRep::adjacent(int i, int j) const {
  return a_.at(static_cast<std::size_t>(i)).intersects(b_.at(static_cast<std::size_t>(j)));
}

Bigraph IntervalBigraphRep::to_bigraph() const {
  std::vector<Edge> edges;
  for (int i = 0; i < a_size(); ++i) {
    for (int j = 0; j < b_size(); ++j) {
      if (adjacent(i, j)) edges.push_back({i, a_size() + j});
    }
  }
  return {a_size(), b_size(), UndirectedGraph(a_size() + b_size(), edges)};
}

SplittingBigraph splitting_bigraph(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + g.loop_count());
  for (const Arc& arc : g.arcs()) edges.push_back({arc.from, n + arc.to});
  return {{n, n, UndirectedGraph(2 * n, edges)}, std::nullopt};
}

SplittingBigraph splitting_bigraph(const Digraph& g, const IntervalRep& rep) {
  if (rep.vertex_count() != g.vertex_count()) {
    throw DimensionMismatch(static_cast<std::size_t>(g.vertex_count()),
                            static_cast<std::size_t>(rep.vertex_count()));
  }
  Digraph realized = realize_digraph(rep);
  if (!(realized == g)) {
    throw DimensionMismatch(g.edge_count() + g.loop_count(),
                            realized.edge_count() + realized.loop_count());
  }
  SplittingBigraph out = splitting_bigraph(g);
  std::vector<Interval> a, b;
  for (const auto& p : rep.pairs()) {
    a.push_back(p.source);
    b.push_back(p.target);
  }
  out.rep = IntervalBigraphRep(std::move(a), std::move(b));
  return out;
}

std::optional<RedBlueState> red_blue_state(const IntervalBigraphRep& rep) {
  auto s = greedy(spans(rep.a()), spans(rep.b()));
  if (!s) return std::nullopt;
  return RedBlueState{std::move(s->order), std::move(s->rho), std::move(s->best),
                      std::move(s->lambda), std::move(s->visited)};
}

std::optional<Certificate> red_blue_min_dominating(const IntervalBigraphRep& rep) {
  auto s = greedy(spans(rep.a()), spans(rep.b()));
  if (!s) return std::nullopt;
  Certificate cert;
  cert.set = chosen(*s);
  cert.provenance = {"red_blue_min_dominating", true};
  return cert;
}

Certificate min_absorbing_reflexive(const NormalizedRep& rep) {
  const int n = rep.vertex_count();
  std::vector<Span<int>> a, b;
  a.reserve(static_cast<std::size_t>(n));
  b.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (!rep.has_arc(v, v)) throw NotReflexive(v);
    a.push_back({rep.l_source(v), rep.r_source(v)});
    b.push_back({rep.l_target(v), rep.r_target(v)});
  }
  auto s = greedy(a, b);
  Certificate cert;
  cert.set = chosen(*s);
  cert.provenance = {"min_absorbing_reflexive", true};
  return cert;
}

Certificate min_dominating_reflexive(const NormalizedRep& rep) {
  Certificate cert = min_absorbing_reflexive(reversed(rep));
  cert.provenance.algorithm = "min_dominating_reflexive";
  return cert;
}

}  // namespace ivdg
