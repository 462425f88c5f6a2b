#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivdg/graph.hpp"

namespace ivdg {

enum class SetMode { independent, absorbing, dominating, kernel, solution };

std::string_view to_string(SetMode mode);
std::optional<SetMode> parse_set_mode(std::string_view text);

struct Provenance {
  std::string algorithm;
  bool optimal = false;
};

/// A computed vertex set together with the definitional checks that were
/// actually run on it. An empty `checks` map means nothing was verified yet.
struct Certificate {
  std::vector<Vertex> set;
  std::map<SetMode, bool> checks;
  Provenance provenance;

  std::size_t size() const noexcept { return set.size(); }
  /// True only if `mode` was checked and passed.
  bool holds(SetMode mode) const;
  bool all_checks_pass() const;
};

// Definitional predicates. Loops never exempt a vertex outside the set.
bool is_independent(const Digraph& g, std::span<const Vertex> s);
bool is_absorbing(const Digraph& g, std::span<const Vertex> s);
bool is_dominating(const Digraph& g, std::span<const Vertex> s);

/// Runs the checks for `mode` (and its components: kernel = independent and
/// absorbing, solution = independent and dominating). Throws InvalidVertex.
Certificate verify_set(const Digraph& g, std::span<const Vertex> s, SetMode mode);

/// Same checks, recorded into an existing certificate.
Certificate& certify(const Digraph& g, Certificate& cert, SetMode mode);

}  // namespace ivdg
