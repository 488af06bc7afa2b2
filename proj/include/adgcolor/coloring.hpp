#pragma once

#include <optional>
#include <vector>

#include "adgcolor/graph.hpp"

namespace adgcolor {

// colors[v] == 0 means uncolored; positive values are assigned colors.
struct Coloring {
  std::vector<color_t> colors;

  Coloring() = default;
  explicit Coloring(vertex_t n) : colors(n, 0) {}

  /// Number of distinct positive colors.
  std::size_t num_colors() const;
  color_t max_color() const;
  bool operator==(const Coloring&) const = default;
};

struct ColoringVerdict {
  bool proper = false;
  std::optional<vertex_t> uncolored;  ///< lowest uncolored vertex, if any
  std::optional<EdgePair> conflict;   ///< lowest monochromatic edge (u < v), if any
};

/// Proper iff every vertex is colored and no edge is monochromatic.
ColoringVerdict validate_coloring(const Graph& g, const Coloring& c);

}  // namespace adgcolor
