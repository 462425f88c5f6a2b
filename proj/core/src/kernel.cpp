#include "ivdg/kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "ivdg/error.hpp"
#include "ivdg/ordering.hpp"

namespace ivdg {
namespace {

void require_reflexive(const NormalizedRep& rep) {
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    if (!rep.has_arc(v, v)) throw NotReflexive(v);
  }
}

void check_weights(std::span<const Weight> weights, int n) {
  if (weights.empty()) return;
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch(static_cast<std::size_t>(n), weights.size());
  }
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (weights[v] < 0) throw VertexError("negative weight", static_cast<long long>(v));
  }
}

// Strictly better under the objective; callers scan candidates in
// increasing position so ties keep the smallest one.
bool better(Objective objective, Weight candidate, Weight incumbent) {
  return objective == Objective::min ? candidate < incumbent : candidate > incumbent;
}

Certificate from_table(const KernelTable& table, int position, std::string algorithm) {
  Certificate cert;
  cert.set = table.materialize(position);
  std::sort(cert.set.begin(), cert.set.end());
  cert.provenance = {std::move(algorithm), true};
  return cert;
}

}  // namespace

std::string_view to_string(Objective objective) {
  return objective == Objective::min ? "min" : "max";
}

ZSequence z_sequence(const NormalizedRep& rep) {
  require_reflexive(rep);
  const int n = rep.vertex_count();
  // The event list is already sorted, which gives both scan orders directly.
  std::vector<Vertex> by_right_source, by_left_source;
  by_right_source.reserve(static_cast<std::size_t>(n));
  by_left_source.reserve(static_cast<std::size_t>(n));
  for (const EndpointEvent& e : rep.events()) {
    if (e.kind != IntervalKind::source) continue;
    (e.side == EndpointSide::right ? by_right_source : by_left_source).push_back(e.vertex);
  }

  ZSequence seq;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::size_t cursor = 0;
  for (Vertex z : by_right_source) {
    if (removed[static_cast<std::size_t>(z)]) continue;
    // Every survivor v has r(S_v) >= r(S_z) >= l(T_z), so v is an in-neighbour
    // of z exactly when l(S_v) <= r(T_z).
    int count = 1;
    removed[static_cast<std::size_t>(z)] = 1;
    while (cursor < by_left_source.size() &&
           rep.l_source(by_left_source[cursor]) <= rep.r_target(z)) {
      Vertex v = by_left_source[cursor++];
      if (!removed[static_cast<std::size_t>(v)]) {
        removed[static_cast<std::size_t>(v)] = 1;
        ++count;
      }
    }
    seq.vertices.push_back(z);
    seq.removed.push_back(count);
  }
  return seq;
}

Certificate kernel_linear(const NormalizedRep& rep) {
  ZSequence seq = z_sequence(rep);
  Certificate cert;
  cert.provenance = {"kernel_linear", false};
  if (seq.vertices.empty()) return cert;
  Vertex last = seq.vertices.back();
  cert.set.push_back(last);
  for (auto it = seq.vertices.rbegin() + 1; it != seq.vertices.rend(); ++it) {
    if (!rep.has_arc(*it, last)) {
      last = *it;
      cert.set.push_back(last);
    }
  }
  std::sort(cert.set.begin(), cert.set.end());
  return cert;
}

std::vector<Vertex> KernelTable::materialize(int position) const {
  std::vector<Vertex> out;
  for (int p = position; p >= 0; p = entries[static_cast<std::size_t>(p)].next) {
    out.push_back(ordering.perm[static_cast<std::size_t>(p)]);
  }
  return out;
}

KernelTable build_kernel_table(const Digraph& g, const Ordering& ord, Objective objective,
                               std::span<const Weight> weights) {
  const int n = g.vertex_count();
  auto pos = positions(ord, n);
  check_weights(weights, n);
  if (auto w = verify_duf_ordering(g, ord)) throw NotDufOrdered(*w);

  auto vertex_at = [&](int p) { return ord.perm[static_cast<std::size_t>(p)]; };
  auto weight_at = [&](int p) {
    return weights.empty() ? Weight{1} : weights[static_cast<std::size_t>(vertex_at(p))];
  };

  KernelTable table;
  table.ordering = ord;
  table.objective = objective;
  table.entries.assign(static_cast<std::size_t>(n), {});

  // in_stamp[q] == i: q is an in-neighbour of position i.
  // out_stamp[q] == i: q is an out-neighbour of position i.
  std::vector<int> in_stamp(static_cast<std::size_t>(n), -1);
  std::vector<int> out_stamp(static_cast<std::size_t>(n), -1);
  std::vector<int> l_index(static_cast<std::size_t>(n), -1);

  for (int i = n - 1; i >= 0; --i) {
    Vertex vi = vertex_at(i);
    int in_above = 0;
    for (Vertex w : g.in_neighbours(vi)) {
      int q = pos[static_cast<std::size_t>(w)];
      in_stamp[static_cast<std::size_t>(q)] = i;
      if (q > i) ++in_above;
    }
    for (Vertex w : g.out_neighbours(vi)) out_stamp[static_cast<std::size_t>(pos[static_cast<std::size_t>(w)])] = i;

    auto& entry = table.entries[static_cast<std::size_t>(i)];
    if (in_above == n - 1 - i) {
      entry = {true, weight_at(i), 1, -1};
      continue;
    }

    // L: positions above i that are not in-neighbours of i, in order.
    int l_size = 0;
    for (int q = i + 1; q < n; ++q) {
      l_index[static_cast<std::size_t>(q)] = in_stamp[static_cast<std::size_t>(q)] == i ? -1 : l_size++;
    }

    int best = -1;
    for (int j = i + 1; j < n; ++j) {
      int idx = l_index[static_cast<std::size_t>(j)];
      if (idx < 0 || out_stamp[static_cast<std::size_t>(j)] == i) continue;
      const auto& cand = table.entries[static_cast<std::size_t>(j)];
      if (!cand.defined) continue;
      if (best >= 0 && !better(objective, cand.value,
                               table.entries[static_cast<std::size_t>(best)].value)) {
        continue;
      }
      // Every L-element before j must be an in-neighbour of j.
      int covered = 0;
      for (Vertex w : g.in_neighbours(vertex_at(j))) {
        int q = pos[static_cast<std::size_t>(w)];
        if (q > i && q < j && l_index[static_cast<std::size_t>(q)] >= 0) ++covered;
      }
      if (covered == idx) best = j;
    }
    if (best >= 0) {
      const auto& b = table.entries[static_cast<std::size_t>(best)];
      entry = {true, weight_at(i) + b.value, b.size + 1, best};
    }
  }
  return table;
}

std::optional<Certificate> optimal_kernel_duf(const Digraph& g, const Ordering& ord,
                                              Objective objective,
                                              std::span<const Weight> weights) {
  KernelTable table = build_kernel_table(g, ord, objective, weights);
  const int n = g.vertex_count();
  if (n == 0) return Certificate{{}, {}, {"optimal_kernel_duf", true}};
  auto pos = positions(ord, n);
  int best = -1;
  for (int j = 0; j < n; ++j) {
    const auto& e = table.entries[static_cast<std::size_t>(j)];
    if (!e.defined) continue;
    if (best >= 0 && !better(objective, e.value, table.entries[static_cast<std::size_t>(best)].value)) {
      continue;
    }
    int below = 0;
    for (Vertex w : g.in_neighbours(ord.perm[static_cast<std::size_t>(j)])) {
      if (pos[static_cast<std::size_t>(w)] < j) ++below;
    }
    if (below == j) best = j;
  }
  if (best < 0) return std::nullopt;
  return from_table(table, best, "optimal_kernel_duf");
}

std::optional<Certificate> optimal_kernel_adjusted(const NormalizedRep& rep, Objective objective) {
  const int n = rep.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (!rep.adjusted(v)) throw NotAdjusted(v);
  }
  if (n == 0) return Certificate{{}, {}, {"optimal_kernel_adjusted", true}};

  // Order by the common left end-point. Normalization keeps l(S_v) < l(T_v)
  // adjacent per vertex, so l(T) is sorted along the same order.
  std::vector<Vertex> perm;
  perm.reserve(static_cast<std::size_t>(n));
  for (const EndpointEvent& e : rep.events()) {
    if (e.kind == IntervalKind::source && e.side == EndpointSide::left) perm.push_back(e.vertex);
  }
  std::vector<int> ls(static_cast<std::size_t>(n)), lt(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    ls[static_cast<std::size_t>(p)] = rep.l_source(perm[static_cast<std::size_t>(p)]);
    lt[static_cast<std::size_t>(p)] = rep.l_target(perm[static_cast<std::size_t>(p)]);
  }
  // Out-neighbours above p form the run of positions q with l(T_q) <= r(S_p);
  // in-neighbours above p those with l(S_q) <= r(T_p). Both include p.
  std::vector<int> max_out(static_cast<std::size_t>(n)), max_in(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    Vertex v = perm[static_cast<std::size_t>(p)];
    auto last_at_most = [&](const std::vector<int>& keys, int bound) {
      return static_cast<int>(std::upper_bound(keys.begin(), keys.end(), bound) - keys.begin()) - 1;
    };
    max_out[static_cast<std::size_t>(p)] = std::max(p, last_at_most(lt, rep.r_source(v)));
    max_in[static_cast<std::size_t>(p)] = std::max(p, last_at_most(ls, rep.r_target(v)));
  }
  // suffix_min[q] = min over j >= q of max_out[j].
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 1, n);
  for (int q = n - 1; q >= 0; --q) {
    suffix_min[static_cast<std::size_t>(q)] =
        std::min(suffix_min[static_cast<std::size_t>(q) + 1], max_out[static_cast<std::size_t>(q)]);
  }

  KernelTable table;
  table.ordering = Ordering(perm, OrderingRole::adjusted);
  table.objective = objective;
  table.entries.assign(static_cast<std::size_t>(n), {});
  for (int i = n - 1; i >= 0; --i) {
    auto& entry = table.entries[static_cast<std::size_t>(i)];
    int in_end = max_in[static_cast<std::size_t>(i)];
    if (in_end == n - 1) {
      entry = {true, 1, 1, -1};
      continue;
    }
    int lo = std::max(in_end, max_out[static_cast<std::size_t>(i)]) + 1;
    int hi = suffix_min[static_cast<std::size_t>(in_end) + 1];
    int best = -1;
    for (int j = lo; j <= hi && j < n; ++j) {
      const auto& cand = table.entries[static_cast<std::size_t>(j)];
      if (!cand.defined) continue;
      if (best < 0 || better(objective, cand.value, table.entries[static_cast<std::size_t>(best)].value)) {
        best = j;
      }
    }
    if (best >= 0) {
      const auto& b = table.entries[static_cast<std::size_t>(best)];
      entry = {true, b.value + 1, b.size + 1, best};
    }
  }

  int y = suffix_min[0];
  int best = -1;
  for (int j = 0; j <= y && j < n; ++j) {
    const auto& e = table.entries[static_cast<std::size_t>(j)];
    if (e.defined && (best < 0 || better(objective, e.value, table.entries[static_cast<std::size_t>(best)].value))) {
      best = j;
    }
  }
  if (best < 0) return std::nullopt;
  return from_table(table, best, "optimal_kernel_adjusted");
}

Certificate min_independent_dominating_cocomp(const UndirectedGraph& h, const Ordering& ord) {
  if (auto w = verify_cocomparability_ordering(h, ord)) throw NotCocompOrdered(*w);
  auto cert = optimal_kernel_duf(symmetric_digraph(h), ord, Objective::min);
  if (!cert) throw std::logic_error("symmetric digraph without a kernel");
  cert->provenance.algorithm = "min_independent_dominating_cocomp";
  return *cert;
}

}  // namespace ivdg
