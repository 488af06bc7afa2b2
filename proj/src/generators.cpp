#include "adgcolor/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "adgcolor/random.hpp"

namespace adgcolor {

Graph generate_er(vertex_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_er: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_er: p must lie in [0, 1]");
  std::vector<EdgePair> edges;
  if (p == 0.0) return Graph::from_edges(n, edges);
  if (p == 1.0) {
    for (vertex_t v = 1; v < n; ++v)
      for (vertex_t w = 0; w < v; ++w) edges.emplace_back(v, w);
    return Graph::from_edges(n, edges);
  }

  // Batagelj & Brandes: walk the lower triangle (v > w) with geometric skips.
  CounterStream rng(seed, Stream::generator);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1, w = -1;
  const std::int64_t nn = n;
  while (v < nn) {
    const double r = rng.next_unit();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<vertex_t>(v), static_cast<vertex_t>(w));
  }
  return Graph::from_edges(n, edges);
}

Graph generate_rmat(unsigned scale, unsigned edge_factor, double a, double b, double c,
                    std::uint64_t seed) {
  if (scale < 1 || scale > 31) throw std::invalid_argument("generate_rmat: scale must lie in [1, 31]");
  if (a < 0 || b < 0 || c < 0 || a + b + c > 1.0 + 1e-12)
    throw std::invalid_argument("generate_rmat: need a, b, c >= 0 and a + b + c <= 1");
  const vertex_t n = vertex_t{1} << scale;
  const std::uint64_t samples = std::uint64_t{edge_factor} * n;
  std::vector<EdgePair> edges(samples);
  const double ab = a + b, abc = a + b + c;
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(samples); ++s) {
    vertex_t u = 0, v = 0;
    for (unsigned level = 0; level < scale; ++level) {
      const double r = to_unit(random_bits(seed, Stream::rmat, static_cast<std::uint64_t>(s), level));
      const vertex_t bit = vertex_t{1} << (scale - 1 - level);
      if (r < a) {
      } else if (r < ab) {
        v |= bit;
      } else if (r < abc) {
        u |= bit;
      } else {
        u |= bit;
        v |= bit;
      }
    }
    edges[static_cast<std::size_t>(s)] = {u, v};
  }
  return Graph::from_edges(n, edges);
}

Graph empty_graph(vertex_t n) { return Graph::from_edges(n, {}); }

Graph complete_graph(vertex_t n) {
  std::vector<EdgePair> edges;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(vertex_t n) {
  std::vector<EdgePair> edges;
  for (vertex_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(vertex_t n) {
  std::vector<EdgePair> edges;
  for (vertex_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(vertex_t leaves) {
  std::vector<EdgePair> edges;
  for (vertex_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<EdgePair> edges;
  for (vertex_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, edges);
}

}  // namespace adgcolor
