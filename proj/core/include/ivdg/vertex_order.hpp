#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "ivdg/graph.hpp"

namespace ivdg {

enum class OrderingRole { duf, reflexive_interval, cocomparability, adjusted };

std::string_view to_string(OrderingRole role);

/// A permutation of the vertices; perm[p] is the vertex at position p.
struct Ordering {
  std::vector<Vertex> perm;
  OrderingRole role = OrderingRole::duf;

  Ordering() = default;
  explicit Ordering(std::vector<Vertex> p, OrderingRole r = OrderingRole::duf)
      : perm(std::move(p)), role(r) {}
  Ordering(std::initializer_list<Vertex> p, OrderingRole r = OrderingRole::duf)
      : perm(p), role(r) {}

  int size() const noexcept { return static_cast<int>(perm.size()); }

  static Ordering identity(int n, OrderingRole role = OrderingRole::duf);
};

/// Throws InvalidOrdering unless `ord` is a permutation of [0, n).
void validate(const Ordering& ord, int n);

/// Inverse permutation: positions(ord)[v] is the position of v.
/// Throws InvalidOrdering if `ord` is not a permutation of [0, n).
std::vector<int> positions(const Ordering& ord, int n);

}  // namespace ivdg
