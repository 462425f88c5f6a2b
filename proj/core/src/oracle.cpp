#include "ivdg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "ivdg/error.hpp"

namespace ivdg::oracle {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr int kMaskBits = 64;

class Deadline {
 public:
  explicit Deadline(const OracleBudget& budget)
      : cap_(budget.time_cap), start_(Clock::now()) {}

  void check() {
    if (!cap_ || (++ticks_ & 0x3FF) != 0) return;
    if (Clock::now() - start_ > *cap_) throw BudgetExceeded("oracle time cap exceeded");
  }

 private:
  std::optional<std::chrono::milliseconds> cap_;
  Clock::time_point start_;
  std::uint64_t ticks_ = 0;
};

void require_size(int n, int limit, const char* what) {
  if (n > limit || n > kMaskBits) {
    throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds budget " + std::to_string(std::min(limit, kMaskBits)));
  }
}

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> out_masks(const Digraph& g) {
  std::vector<Mask> m(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (u != v && g.has_edge(u, v)) m[static_cast<std::size_t>(u)] |= bit(v);
    }
  }
  return m;
}

std::vector<Vertex> members(Mask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Weight weight_of(std::span<const Weight> weights, Vertex v) {
  return weights.empty() ? Weight{1} : weights[static_cast<std::size_t>(v)];
}

void check_weights(std::span<const Weight> weights, int n) {
  if (!weights.empty() && weights.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch(static_cast<std::size_t>(n), weights.size());
  }
}

// Decides vertices 0..n-1 in order, keeping the chosen set independent. A
// skipped vertex must end up with an out-neighbour in the set.
struct KernelSearch {
  int n;
  std::vector<Mask> out;
  std::vector<Mask> adj;  // out | in
  std::span<const Weight> weights;
  KernelQuery query;
  Deadline deadline;
  std::optional<Mask> best;
  Weight best_value = 0;

  bool skipped_ok(Mask chosen, Mask skipped, int next) const {
    Mask open = 0;
    if (next < n) open = ~Mask{0} << next;
    Mask blocked = 0;
    for (Vertex v : members(chosen)) blocked |= adj[static_cast<std::size_t>(v)];
    for (Vertex u : members(skipped)) {
      Mask o = out[static_cast<std::size_t>(u)];
      if ((o & chosen) == 0 && (o & open & ~blocked) == 0) return false;
    }
    return true;
  }

  bool run(int i, Mask chosen, Mask skipped, Weight value, Weight remaining) {
    deadline.check();
    if (!skipped_ok(chosen, skipped, i)) return false;
    if (query == KernelQuery::min && best && value >= best_value) return false;
    if (query == KernelQuery::max && best && value + remaining <= best_value) return false;
    if (i == n) {
      best = chosen;
      best_value = value;
      return query == KernelQuery::exists;
    }
    Weight w = weight_of(weights, i);
    bool free = true;
    for (Vertex v : members(chosen)) {
      if (adj[static_cast<std::size_t>(v)] & bit(i)) free = false;
    }
    if (free && run(i + 1, chosen | bit(i), skipped, value + w, remaining - w)) return true;
    return run(i + 1, chosen, skipped | bit(i), value, remaining - w);
  }
};

// Iterative deepening: every absorbing set contains the first unabsorbed
// vertex or one of its out-neighbours.
struct AbsorbSearch {
  int n;
  std::vector<Mask> out;
  Deadline deadline;

  std::optional<Mask> run(Mask chosen, int left) {
    deadline.check();
    Mask absorbed = chosen;
    for (Vertex u = 0; u < n; ++u) {
      if (out[static_cast<std::size_t>(u)] & chosen) absorbed |= bit(u);
    }
    Mask all = n == kMaskBits ? ~Mask{0} : bit(n) - 1;
    Mask missing = all & ~absorbed;
    if (missing == 0) return chosen;
    if (left == 0) return std::nullopt;
    Vertex v = std::countr_zero(missing);
    for (Vertex w : members(bit(v) | out[static_cast<std::size_t>(v)])) {
      if (auto r = run(chosen | bit(w), left - 1)) return r;
    }
    return std::nullopt;
  }
};

Certificate make(std::vector<Vertex> set, const char* algorithm) {
  Certificate c;
  c.set = std::move(set);
  std::sort(c.set.begin(), c.set.end());
  c.provenance = {algorithm, true};
  return c;
}

}  // namespace

std::optional<Certificate> brute_kernel(const Digraph& g, KernelQuery query,
                                        std::span<const Weight> weights,
                                        const OracleBudget& budget) {
  const int n = g.vertex_count();
  require_size(n, budget.subset_n, "brute_kernel");
  check_weights(weights, n);
  KernelSearch s{n, out_masks(g), {}, weights, query, Deadline(budget), std::nullopt, 0};
  s.adj = s.out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : members(s.out[static_cast<std::size_t>(u)])) s.adj[static_cast<std::size_t>(v)] |= bit(u);
  }
  Weight total = 0;
  for (Vertex v = 0; v < n; ++v) total += weight_of(weights, v);
  s.run(0, 0, 0, 0, total);
  if (!s.best) return std::nullopt;
  return make(members(*s.best), "brute_kernel");
}

Certificate brute_min_absorbing(const Digraph& g, const OracleBudget& budget) {
  const int n = g.vertex_count();
  require_size(n, budget.subset_n, "brute_min_absorbing");
  AbsorbSearch s{n, out_masks(g), Deadline(budget)};
  for (int size = 0;; ++size) {
    if (auto r = s.run(0, size)) return make(members(*r), "brute_min_absorbing");
  }
}

Certificate brute_min_dominating(const Digraph& g, const OracleBudget& budget) {
  Certificate c = brute_min_absorbing(reverse(g), budget);
  c.provenance.algorithm = "brute_min_dominating";
  return c;
}

Certificate brute_max_independent(const Digraph& g, std::span<const Weight> weights,
                                  const OracleBudget& budget) {
  const int n = g.vertex_count();
  require_size(n, budget.subset_n, "brute_max_independent");
  check_weights(weights, n);
  auto out = out_masks(g);
  std::vector<Mask> adj = out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : members(out[static_cast<std::size_t>(u)])) adj[static_cast<std::size_t>(v)] |= bit(u);
  }
  std::vector<Weight> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix[static_cast<std::size_t>(v)] = suffix[static_cast<std::size_t>(v) + 1] + weight_of(weights, v);

  Deadline deadline(budget);
  Mask best = 0;
  Weight best_value = -1;
  auto rec = [&](auto&& self, int i, Mask chosen, Weight value) -> void {
    deadline.check();
    if (value + suffix[static_cast<std::size_t>(i)] <= best_value) return;
    if (i == n) {
      best = chosen;
      best_value = value;
      return;
    }
    if ((adj[static_cast<std::size_t>(i)] & chosen) == 0) {
      self(self, i + 1, chosen | bit(i), value + weight_of(weights, i));
    }
    self(self, i + 1, chosen, value);
  };
  rec(rec, 0, 0, 0);
  return make(members(best), "brute_max_independent");
}

std::optional<Certificate> brute_red_blue(const Bigraph& bg, const OracleBudget& budget) {
  require_size(bg.b_size, budget.subset_n, "brute_red_blue");
  const int na = bg.a_size;
  const std::size_t words = (static_cast<std::size_t>(na) + 63) / 64;
  std::vector<std::vector<Mask>> cover(static_cast<std::size_t>(bg.b_size), std::vector<Mask>(words, 0));
  std::vector<Mask> any(words, 0);
  for (int j = 0; j < bg.b_size; ++j) {
    for (Vertex w : bg.graph.neighbours(bg.b_vertex(j))) {
      if (w < na) {
        cover[static_cast<std::size_t>(j)][static_cast<std::size_t>(w) / 64] |= bit(w % 64);
        any[static_cast<std::size_t>(w) / 64] |= bit(w % 64);
      }
    }
  }
  for (int i = 0; i < na; ++i) {
    if (!(any[static_cast<std::size_t>(i) / 64] & bit(i % 64))) return std::nullopt;
  }
  auto covers = [&](const std::vector<int>& pick) {
    std::vector<Mask> u(words, 0);
    for (int j : pick) {
      for (std::size_t w = 0; w < words; ++w) u[w] |= cover[static_cast<std::size_t>(j)][w];
    }
    return u == any;
  };
  Deadline deadline(budget);
  // Subsets by increasing size, lexicographic within a size.
  for (int size = 0; size <= bg.b_size; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      deadline.check();
      if (covers(pick)) return make(pick, "brute_red_blue");
      int k = size - 1;
      while (k >= 0 && pick[static_cast<std::size_t>(k)] == bg.b_size - size + k) --k;
      if (k < 0) break;
      ++pick[static_cast<std::size_t>(k)];
      for (int t = k + 1; t < size; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t) - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> brute_red_blue(const IntervalBigraphRep& rep, const OracleBudget& budget) {
  return brute_red_blue(rep.to_bigraph(), budget);
}

std::optional<K33Witness> find_induced_k33(const UndirectedGraph& h, const OracleBudget& budget) {
  const int n = h.vertex_count();
  require_size(n, budget.k33_n, "find_induced_k33");
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : h.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  auto independent_triple = [&](Mask pool) -> std::optional<std::array<Vertex, 3>> {
    auto vs = members(pool);
    for (std::size_t x = 0; x < vs.size(); ++x) {
      for (std::size_t y = x + 1; y < vs.size(); ++y) {
        if (adj[static_cast<std::size_t>(vs[x])] & bit(vs[y])) continue;
        Mask rest = pool & ~adj[static_cast<std::size_t>(vs[x])] & ~adj[static_cast<std::size_t>(vs[y])];
        rest &= ~((bit(vs[y]) << 1) - 1);
        if (rest) return std::array<Vertex, 3>{vs[x], vs[y], std::countr_zero(rest)};
      }
    }
    return std::nullopt;
  };
  Deadline deadline(budget);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (adj[static_cast<std::size_t>(a)] & bit(b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        deadline.check();
        if ((adj[static_cast<std::size_t>(a)] | adj[static_cast<std::size_t>(b)]) & bit(c)) continue;
        Mask common = adj[static_cast<std::size_t>(a)] & adj[static_cast<std::size_t>(b)] & adj[static_cast<std::size_t>(c)];
        if (auto right = independent_triple(common)) return K33Witness{{a, b, c}, *right};
      }
    }
  }
  return std::nullopt;
}

std::optional<StructureWitness> brute_forbidden_structure(const Digraph& g, const Ordering& ord,
                                                          const OracleBudget& budget) {
  const int n = g.vertex_count();
  require_size(n, budget.subset_n, "brute_forbidden_structure");
  validate(ord, n);
  auto E = [&](int p, int q) {
    return g.has_edge(ord.perm[static_cast<std::size_t>(p)], ord.perm[static_cast<std::size_t>(q)]);
  };
  Deadline deadline(budget);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          deadline.check();
          bool distinct = b < c;
          bool hit[6] = {
              E(a, d) && !E(a, b) && !E(c, d),
              E(a, d) && E(b, c) && !E(a, c) && !E(b, d),
              distinct && E(a, c) && E(b, d) && !E(a, d) && !E(b, c),
              E(d, a) && !E(b, a) && !E(d, c),
              E(d, a) && E(c, b) && !E(c, a) && !E(d, b),
              distinct && E(c, a) && E(d, b) && !E(d, a) && !E(c, b),
          };
          for (int k = 0; k < 6; ++k) {
            if (hit[k]) {
              auto at = [&](int p) { return ord.perm[static_cast<std::size_t>(p)]; };
              return StructureWitness{static_cast<StructureKind>(k), {at(a), at(b), at(c), at(d)}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Ordering> brute_ordering_search(const Digraph& g, OrderingKind kind,
                                              const OracleBudget& budget) {
  const int n = g.vertex_count();
  require_size(n, budget.permutation_n, "brute_ordering_search");
  if (kind == OrderingKind::reflexive_interval && !g.is_reflexive()) return std::nullopt;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  auto E = [&](Vertex u, Vertex v) { return g.has_edge(u, v); };
  Deadline deadline(budget);
  do {
    deadline.check();
    Ordering ord(perm, kind == OrderingKind::duf ? OrderingRole::duf : OrderingRole::reflexive_interval);
    bool ok = true;
    if (kind == OrderingKind::duf) {
      for (int i = 0; i < n && ok; ++i) {
        for (int j = i + 1; j < n && ok; ++j) {
          for (int k = j + 1; k < n && ok; ++k) {
            Vertex a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)],
                   c = perm[static_cast<std::size_t>(k)];
            if (E(a, c) && !E(a, b) && !E(b, c)) ok = false;
            if (E(c, a) && !E(c, b) && !E(b, a)) ok = false;
          }
        }
      }
    } else {
      OracleBudget inner = budget;
      inner.time_cap.reset();
      ok = !brute_forbidden_structure(g, ord, inner).has_value();
    }
    if (ok) return ord;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<AntiWalkWitness> brute_anti_directed_walk(const Digraph& g,
                                                        const OracleBudget& budget) {
  const int n = g.vertex_count();
  require_size(n, budget.subset_n, "brute_anti_directed_walk");
  Deadline deadline(budget);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex c = 0; c < n; ++c) {
        for (Vertex d = 0; d < n; ++d) {
          deadline.check();
          if (g.has_edge(a, b) && g.has_edge(c, b) && g.has_edge(c, d) && !g.has_edge(a, d)) {
            return AntiWalkWitness{a, b, c, d};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ivdg::oracle
