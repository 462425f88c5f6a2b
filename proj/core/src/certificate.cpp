#include "ivdg/certificate.hpp"

#include <algorithm>

#include "ivdg/error.hpp"

namespace ivdg {
namespace {

std::vector<char> membership(const Digraph& g, std::span<const Vertex> s) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidVertex(v);
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

bool covered(const Digraph& g, std::span<const Vertex> s, bool by_out_neighbour) {
  auto in = membership(g, s);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in[static_cast<std::size_t>(v)]) continue;
    auto nbrs = by_out_neighbour ? g.out_neighbours(v) : g.in_neighbours(v);
    if (std::none_of(nbrs.begin(), nbrs.end(),
                     [&](Vertex w) { return in[static_cast<std::size_t>(w)] != 0; })) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(SetMode mode) {
  switch (mode) {
    case SetMode::independent: return "independent";
    case SetMode::absorbing: return "absorbing";
    case SetMode::dominating: return "dominating";
    case SetMode::kernel: return "kernel";
    case SetMode::solution: return "solution";
  }
  return "?";
}

std::optional<SetMode> parse_set_mode(std::string_view text) {
  for (SetMode m : {SetMode::independent, SetMode::absorbing, SetMode::dominating,
                    SetMode::kernel, SetMode::solution}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

bool Certificate::holds(SetMode mode) const {
  auto it = checks.find(mode);
  return it != checks.end() && it->second;
}

bool Certificate::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

bool is_independent(const Digraph& g, std::span<const Vertex> s) {
  auto in = membership(g, s);
  for (Vertex u : s) {
    for (Vertex v : g.out_neighbours(u)) {
      if (in[static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

bool is_absorbing(const Digraph& g, std::span<const Vertex> s) { return covered(g, s, true); }

bool is_dominating(const Digraph& g, std::span<const Vertex> s) { return covered(g, s, false); }

Certificate& certify(const Digraph& g, Certificate& cert, SetMode mode) {
  auto& checks = cert.checks;
  const auto& s = cert.set;
  switch (mode) {
    case SetMode::independent:
      checks[SetMode::independent] = is_independent(g, s);
      break;
    case SetMode::absorbing:
      checks[SetMode::absorbing] = is_absorbing(g, s);
      break;
    case SetMode::dominating:
      checks[SetMode::dominating] = is_dominating(g, s);
      break;
    case SetMode::kernel:
      checks[SetMode::independent] = is_independent(g, s);
      checks[SetMode::absorbing] = is_absorbing(g, s);
      checks[SetMode::kernel] = checks[SetMode::independent] && checks[SetMode::absorbing];
      break;
    case SetMode::solution:
      checks[SetMode::independent] = is_independent(g, s);
      checks[SetMode::dominating] = is_dominating(g, s);
      checks[SetMode::solution] = checks[SetMode::independent] && checks[SetMode::dominating];
      break;
  }
  return cert;
}

Certificate verify_set(const Digraph& g, std::span<const Vertex> s, SetMode mode) {
  Certificate cert;
  cert.set.assign(s.begin(), s.end());
  cert.provenance.algorithm = "verify";
  certify(g, cert, mode);
  return cert;
}

}  // namespace ivdg
