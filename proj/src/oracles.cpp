#include "adgcolor/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace adgcolor {

DegeneracyResult exact_degeneracy(const Graph& g) {
  const vertex_t n = g.num_vertices();
  DegeneracyResult res;
  res.order.resize(n);
  res.core.resize(n);
  if (n == 0) return res;

  const vertex_t md = g.max_degree();
  std::vector<vertex_t> deg(n), pos(n), bin(static_cast<std::size_t>(md) + 1, 0);
  auto& vert = res.order;
  for (vertex_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    ++bin[deg[v]];
  }
  vertex_t start = 0;
  for (vertex_t d = 0; d <= md; ++d) {
    vertex_t num = bin[d];
    bin[d] = start;
    start += num;
  }
  for (vertex_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]];
    vert[pos[v]] = v;
    ++bin[deg[v]];
  }
  for (vertex_t d = md; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (vertex_t i = 0; i < n; ++i) {
    const vertex_t v = vert[i];
    res.degeneracy = std::max(res.degeneracy, deg[v]);
    for (vertex_t u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        // Swap u with the first vertex of its bucket, then shrink the bucket.
        const vertex_t du = deg[u], pu = pos[u], pw = bin[du], w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  for (vertex_t v = 0; v < n; ++v) res.core[v] = deg[v];
  return res;
}

namespace {

class ChromaticSearch {
 public:
  ChromaticSearch(const Graph& g, vertex_t k) : g_(g), k_(k), color_(g.num_vertices(), 0) {
    order_.resize(g.num_vertices());
    std::iota(order_.begin(), order_.end(), vertex_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](vertex_t a, vertex_t b) { return g.degree(a) > g.degree(b); });
  }

  bool run() { return assign(0, 0); }

 private:
  // used = highest color so far; new colors are opened one at a time to
  // skip permutations of the same partition.
  bool assign(std::size_t idx, vertex_t used) {
    if (idx == order_.size()) return true;
    const vertex_t v = order_[idx];
    const vertex_t limit = std::min(k_, used + 1);
    for (vertex_t c = 1; c <= limit; ++c) {
      bool ok = true;
      for (vertex_t u : g_.neighbors(v))
        if (color_[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_[v] = c;
      if (assign(idx + 1, std::max(used, c))) return true;
      color_[v] = 0;
    }
    return false;
  }

  const Graph& g_;
  vertex_t k_;
  std::vector<vertex_t> color_;
  std::vector<vertex_t> order_;
};

}  // namespace

vertex_t brute_force_chromatic(const Graph& g) {
  if (g.num_vertices() > kBruteForceChromaticLimit)
    throw std::length_error("brute_force_chromatic: graph has " + std::to_string(g.num_vertices()) +
                            " vertices, limit is " + std::to_string(kBruteForceChromaticLimit));
  if (g.num_vertices() == 0) return 0;
  for (vertex_t k = 1;; ++k)
    if (ChromaticSearch(g, k).run()) return k;
}

}  // namespace adgcolor
