#include "ivdg/vertex_order.hpp"

#include <numeric>
#include <string>

#include "ivdg/error.hpp"

namespace ivdg {

std::string_view to_string(OrderingRole role) {
  switch (role) {
    case OrderingRole::duf: return "duf";
    case OrderingRole::reflexive_interval: return "reflexive-interval";
    case OrderingRole::cocomparability: return "cocomparability";
    case OrderingRole::adjusted: return "adjusted";
  }
  return "?";
}

Ordering Ordering::identity(int n, OrderingRole role) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return Ordering(std::move(p), role);
}

std::vector<int> positions(const Ordering& ord, int n) {
  if (ord.size() != n) {
    throw InvalidOrdering("ordering has " + std::to_string(ord.size()) + " entries for " +
                          std::to_string(n) + " vertices");
  }
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    Vertex v = ord.perm[static_cast<std::size_t>(p)];
    if (v < 0 || v >= n) throw InvalidOrdering("ordering names vertex " + std::to_string(v));
    if (pos[static_cast<std::size_t>(v)] != -1) {
      throw InvalidOrdering("ordering repeats vertex " + std::to_string(v));
    }
    pos[static_cast<std::size_t>(v)] = p;
  }
  return pos;
}

void validate(const Ordering& ord, int n) { (void)positions(ord, n); }

}  // namespace ivdg
