#include "ivdg/ordering.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace ivdg {
namespace {

using Bits = std::vector<std::uint64_t>;

void require_reflexive(const Digraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.has_loop(v)) throw NotReflexive(v);
  }
}

// Neighbour positions of the vertex at position p, sorted.
template <class Neighbours>
std::vector<int> neighbour_positions(const std::vector<int>& pos, Neighbours nbrs) {
  std::vector<int> out;
  out.reserve(nbrs.size());
  for (Vertex w : nbrs) out.push_back(pos[static_cast<std::size_t>(w)]);
  std::sort(out.begin(), out.end());
  return out;
}

// Adjacency rows indexed by position; bit q of row p means the edge goes
// from position p to position q (out) or from q to p (in). Loops included.
struct PositionMatrix {
  int n = 0;
  std::size_t words = 0;
  std::vector<Bits> out;
  std::vector<Bits> in;

  PositionMatrix(const Digraph& g, const Ordering& ord, const std::vector<int>& pos)
      : n(g.vertex_count()), words((static_cast<std::size_t>(n) + 63) / 64) {
    out.assign(static_cast<std::size_t>(n), Bits(words, 0));
    in.assign(static_cast<std::size_t>(n), Bits(words, 0));
    for (int p = 0; p < n; ++p) {
      Vertex v = ord.perm[static_cast<std::size_t>(p)];
      if (g.has_loop(v)) {
        set(out, p, p);
        set(in, p, p);
      }
      for (Vertex w : g.out_neighbours(v)) {
        int q = pos[static_cast<std::size_t>(w)];
        set(out, p, q);
        set(in, q, p);
      }
    }
  }

  static void set(std::vector<Bits>& rows, int p, int q) {
    rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(q) / 64] |=
        std::uint64_t{1} << (q % 64);
  }
  bool arc(int p, int q) const {
    return (out[static_cast<std::size_t>(p)][static_cast<std::size_t>(q) / 64] >> (q % 64)) & 1U;
  }
};

}  // namespace

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::i: return "i";
    case StructureKind::ii: return "ii";
    case StructureKind::iii: return "iii";
    case StructureKind::iv: return "iv";
    case StructureKind::v: return "v";
    case StructureKind::vi: return "vi";
    case StructureKind::duf_out: return "duf-out";
    case StructureKind::duf_in: return "duf-in";
    case StructureKind::umbrella: return "umbrella";
    case StructureKind::unlocated: return "unlocated";
  }
  return "?";
}

WitnessError::WitnessError(const std::string& what, StructureWitness w)
    : Error(what + " (" + std::string(to_string(w.kind)) + ")"), witness_(w) {}

std::optional<StructureWitness> verify_duf_ordering(const Digraph& g, const Ordering& ord) {
  const int n = g.vertex_count();
  auto pos = positions(ord, n);
  auto at = [&](int p) { return ord.perm[static_cast<std::size_t>(p)]; };
  for (int pi = 0; pi < n; ++pi) {
    Vertex i = at(pi);
    for (int pk : neighbour_positions(pos, g.out_neighbours(i))) {
      for (int pj = pi + 1; pj < pk; ++pj) {
        if (!g.has_edge(i, at(pj)) && !g.has_edge(at(pj), at(pk))) {
          return StructureWitness{StructureKind::duf_out, {i, at(pj), at(pk), -1}};
        }
      }
    }
    for (int pk : neighbour_positions(pos, g.in_neighbours(i))) {
      for (int pj = pi + 1; pj < pk; ++pj) {
        if (!g.has_edge(at(pk), at(pj)) && !g.has_edge(at(pj), i)) {
          return StructureWitness{StructureKind::duf_in, {i, at(pj), at(pk), -1}};
        }
      }
    }
  }
  return std::nullopt;
}

IntervalRep construct_representation(const Digraph& g, const Ordering& ord) {
  const int n = g.vertex_count();
  auto pos = positions(ord, n);
  // Coordinates are scaled by n + 1 so that every value is an integer; the
  // vertex at 0-based position p sits at point p + 1.
  const std::int64_t scale = n + 1;
  std::vector<std::int64_t> r_s(static_cast<std::size_t>(n)), r_t(static_cast<std::size_t>(n));
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);

  auto right_end = [&](int p, std::span<const Vertex> nbrs, int tag) {
    for (Vertex w : nbrs) stamp[static_cast<std::size_t>(pos[static_cast<std::size_t>(w)])] = tag;
    int y = p + 1;
    while (y < n && stamp[static_cast<std::size_t>(y)] == tag) ++y;
    std::int64_t z = 0;
    for (Vertex w : nbrs) z += pos[static_cast<std::size_t>(w)] > y ? 1 : 0;
    // y is 0-based here, so y - 1 in 1-based terms is y.
    return static_cast<std::int64_t>(y) * scale + z;
  };

  for (int p = 0; p < n; ++p) {
    Vertex v = ord.perm[static_cast<std::size_t>(p)];
    r_s[static_cast<std::size_t>(p)] = right_end(p, g.out_neighbours(v), 2 * p);
    r_t[static_cast<std::size_t>(p)] = right_end(p, g.in_neighbours(v), 2 * p + 1);
  }

  std::vector<IntervalPair> pairs(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    Vertex v = ord.perm[static_cast<std::size_t>(p)];
    std::int64_t point = static_cast<std::int64_t>(p + 1) * scale;
    std::int64_t l_t = point, l_s = point;
    for (Vertex w : g.in_neighbours(v)) {
      int q = pos[static_cast<std::size_t>(w)];
      if (q < p) l_t = std::min(l_t, r_s[static_cast<std::size_t>(q)]);
    }
    for (Vertex w : g.out_neighbours(v)) {
      int q = pos[static_cast<std::size_t>(w)];
      if (q < p) l_s = std::min(l_s, r_t[static_cast<std::size_t>(q)]);
    }
    pairs[static_cast<std::size_t>(v)] = {
        {Rational(l_s, scale), Rational(r_s[static_cast<std::size_t>(p)], scale)},
        {Rational(l_t, scale), Rational(r_t[static_cast<std::size_t>(p)], scale)}};
  }
  return IntervalRep(std::move(pairs));
}

std::optional<StructureWitness> find_forbidden_structure(const Digraph& g, const Ordering& ord) {
  const int n = g.vertex_count();
  auto pos = positions(ord, n);
  PositionMatrix m(g, ord, pos);
  auto at = [&](int p) { return ord.perm[static_cast<std::size_t>(p)]; };
  const auto& out = m.out;
  const auto& in = m.in;

  constexpr int kinds = 6;
  const Bits* plus[kinds];
  const Bits* minus[kinds];
  for (int a = 0; a < n; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    for (int b = a + 1; b < n; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      for (int c = b; c + 1 < n; ++c) {
        const auto uc = static_cast<std::size_t>(c);
        // Candidate d sets are plus[k] & ~minus[k] restricted to d > c.
        bool active[kinds] = {
            !m.arc(a, b),
            m.arc(b, c) && !m.arc(a, c),
            b < c && m.arc(a, c) && !m.arc(b, c),
            !m.arc(b, a),
            m.arc(c, b) && !m.arc(c, a),
            b < c && m.arc(c, a) && !m.arc(c, b),
        };
        plus[0] = &out[ua], minus[0] = &out[uc];
        plus[1] = &out[ua], minus[1] = &out[ub];
        plus[2] = &out[ub], minus[2] = &out[ua];
        plus[3] = &in[ua], minus[3] = &in[uc];
        plus[4] = &in[ua], minus[4] = &in[ub];
        plus[5] = &in[ub], minus[5] = &in[ua];
        if (std::none_of(active, active + kinds, [](bool x) { return x; })) continue;

        const std::size_t first = static_cast<std::size_t>(c + 1) / 64;
        for (std::size_t w = first; w < m.words; ++w) {
          std::uint64_t low_mask =
              w == first ? ~std::uint64_t{0} << ((c + 1) % 64) : ~std::uint64_t{0};
          std::uint64_t best = 0;
          std::uint64_t word[kinds] = {};
          for (int k = 0; k < kinds; ++k) {
            if (!active[k]) continue;
            word[k] = (*plus[k])[w] & ~(*minus[k])[w] & low_mask;
            best |= word[k];
          }
          if (best == 0) continue;
          int bit = std::countr_zero(best);
          int d = static_cast<int>(w * 64) + bit;
          for (int k = 0; k < kinds; ++k) {
            if ((word[k] >> bit) & 1U) {
              return StructureWitness{static_cast<StructureKind>(k), {at(a), at(b), at(c), at(d)}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<StructureWitness> check_reflexive_interval_ordering(const Digraph& g,
                                                                  const Ordering& ord) {
  require_reflexive(g);
  validate(ord, g.vertex_count());
  if (verify_representation(construct_representation(g, ord), g)) return std::nullopt;
  if (g.vertex_count() <= kWitnessSearchLimit) {
    if (auto w = find_forbidden_structure(g, ord)) return w;
  }
  return StructureWitness{StructureKind::unlocated, {}};
}

IntervalRep build_representation(const Digraph& g, const Ordering& ord) {
  require_reflexive(g);
  validate(ord, g.vertex_count());
  IntervalRep rep = construct_representation(g, ord);
  if (verify_representation(rep, g)) return rep;
  std::optional<StructureWitness> w;
  if (g.vertex_count() <= kWitnessSearchLimit) w = find_forbidden_structure(g, ord);
  throw ForbiddenStructure(w.value_or(StructureWitness{StructureKind::unlocated, {}}));
}

std::optional<StructureWitness> verify_cocomparability_ordering(const UndirectedGraph& h,
                                                                const Ordering& ord) {
  const int n = h.vertex_count();
  auto pos = positions(ord, n);
  auto at = [&](int p) { return ord.perm[static_cast<std::size_t>(p)]; };
  for (int pi = 0; pi < n; ++pi) {
    Vertex i = at(pi);
    for (int pk : neighbour_positions(pos, h.neighbours(i))) {
      for (int pj = pi + 1; pj < pk; ++pj) {
        if (!h.has_edge(i, at(pj)) && !h.has_edge(at(pj), at(pk))) {
          return StructureWitness{StructureKind::umbrella, {i, at(pj), at(pk), -1}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ivdg
