#include "ivdg/independent_set.hpp"

#include <algorithm>

#include "ivdg/error.hpp"
#include "ivdg/ordering.hpp"

namespace ivdg {

ChainDag longest_chains(const Digraph& g, const Ordering& ord, std::span<const Weight> weights) {
  const int n = g.vertex_count();
  auto pos = positions(ord, n);
  if (!weights.empty() && weights.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch(static_cast<std::size_t>(n), weights.size());
  }
  ChainDag dag{ord, std::vector<Weight>(static_cast<std::size_t>(n), 0),
               std::vector<int>(static_cast<std::size_t>(n), -1)};
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);
  for (int p = n - 1; p >= 0; --p) {
    Vertex v = ord.perm[static_cast<std::size_t>(p)];
    for (Vertex w : g.out_neighbours(v)) stamp[static_cast<std::size_t>(pos[static_cast<std::size_t>(w)])] = p;
    for (Vertex w : g.in_neighbours(v)) stamp[static_cast<std::size_t>(pos[static_cast<std::size_t>(w)])] = p;
    int best = -1;
    for (int q = p + 1; q < n; ++q) {
      if (stamp[static_cast<std::size_t>(q)] == p) continue;
      if (best < 0 || dag.value[static_cast<std::size_t>(q)] > dag.value[static_cast<std::size_t>(best)]) {
        best = q;
      }
    }
    Weight w = weights.empty() ? Weight{1} : weights[static_cast<std::size_t>(v)];
    if (w < 0) throw VertexError("negative weight", v);
    dag.value[static_cast<std::size_t>(p)] = w + (best < 0 ? 0 : dag.value[static_cast<std::size_t>(best)]);
    dag.next[static_cast<std::size_t>(p)] = best;
  }
  return dag;
}

Certificate max_independent_duf(const Digraph& g, const Ordering& ord,
                                std::span<const Weight> weights) {
  validate(ord, g.vertex_count());
  if (auto w = verify_duf_ordering(g, ord)) throw NotDufOrdered(*w);
  ChainDag dag = longest_chains(g, ord, weights);
  Certificate cert;
  cert.provenance = {"max_independent_duf", true};
  int start = -1;
  for (int p = 0; p < g.vertex_count(); ++p) {
    if (start < 0 || dag.value[static_cast<std::size_t>(p)] > dag.value[static_cast<std::size_t>(start)]) {
      start = p;
    }
  }
  for (int p = start; p >= 0; p = dag.next[static_cast<std::size_t>(p)]) {
    cert.set.push_back(ord.perm[static_cast<std::size_t>(p)]);
  }
  std::sort(cert.set.begin(), cert.set.end());
  return cert;
}

}  // namespace ivdg
