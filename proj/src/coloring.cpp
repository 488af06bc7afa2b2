#include "adgcolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace adgcolor {

std::size_t Coloring::num_colors() const {
  std::vector<color_t> seen;
  seen.reserve(colors.size());
  for (color_t c : colors)
    if (c > 0) seen.push_back(c);
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

color_t Coloring::max_color() const {
  color_t m = 0;
  for (color_t c : colors) m = std::max(m, c);
  return m;
}

ColoringVerdict validate_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.num_vertices())
    throw std::invalid_argument("validate_coloring: coloring size does not match the graph");
  ColoringVerdict verdict;
  for (vertex_t v = 0; v < g.num_vertices(); ++v)
    if (c.colors[v] <= 0) {
      verdict.uncolored = v;
      return verdict;
    }
  for (vertex_t u = 0; u < g.num_vertices(); ++u)
    for (vertex_t v : g.neighbors(u))
      if (u < v && c.colors[u] == c.colors[v]) {
        verdict.conflict = EdgePair{u, v};
        return verdict;
      }
  verdict.proper = true;
  return verdict;
}

}  // namespace adgcolor
