#pragma once

#include <vector>

#include "adgcolor/graph.hpp"

namespace adgcolor {

struct DegeneracyResult {
  vertex_t degeneracy = 0;
  /// Vertices in removal order; each has at most `degeneracy` neighbors later.
  std::vector<vertex_t> order;
  /// Core number of every vertex.
  std::vector<vertex_t> core;
};

/// Exact degeneracy by smallest-last removal (Batagelj-Zaversnik bucket
/// queue, O(n + m)).
DegeneracyResult exact_degeneracy(const Graph& g);

inline constexpr vertex_t kBruteForceChromaticLimit = 16;

/// Exact chromatic number by backtracking over k = 1, 2, ...
/// Throws std::length_error above kBruteForceChromaticLimit vertices.
vertex_t brute_force_chromatic(const Graph& g);

}  // namespace adgcolor
