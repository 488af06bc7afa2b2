#include "adgcolor/jp.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>

#include "adgcolor/parallel.hpp"

namespace adgcolor {

PriorityDag build_dag(const Graph& g, const OrderingResult& order) {
  const vertex_t n = g.num_vertices();
  if (order.rank.size() != n || order.tiebreak.size() != n)
    throw std::invalid_argument("build_dag: ordering does not match the graph");
  PriorityDag dag;
  dag.priority = &order;
  dag.pred_count.assign(n, 0);
#pragma omp parallel for schedule(dynamic, 512)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const auto v = static_cast<vertex_t>(i);
    vertex_t c = 0;
    for (vertex_t u : g.neighbors(v)) c += order.higher(u, v) ? 1 : 0;
    dag.pred_count[v] = c;
  }
  return dag;
}

PriorityDag dag_from_fused(const FusedOrdering& fused) {
  PriorityDag dag;
  dag.priority = &fused.ordering;
  dag.pred_count = fused.pred_count;
  return dag;
}

namespace {

// Per-worker palette over {1, ..., |pred| + 1}; cleared through the touched
// list so each call costs O(|pred|).
class ScratchPalette {
 public:
  explicit ScratchPalette(std::size_t capacity) : used_(capacity + 2, 0) {}

  color_t smallest_free(const Graph& g, const PriorityDag& dag, const std::vector<color_t>& colors,
                        vertex_t v) {
    const auto limit = static_cast<color_t>(dag.pred_count[v] + 1);
    for (vertex_t u : g.neighbors(v)) {
      if (!dag.higher(u, v)) continue;
      const color_t c = colors[u];
      if (c <= limit && !used_[c]) {
        used_[c] = 1;
        touched_.push_back(c);
      }
    }
    color_t pick = 1;
    while (used_[pick]) ++pick;
    for (color_t c : touched_) used_[c] = 0;
    touched_.clear();
    return pick;
  }

 private:
  std::vector<std::uint8_t> used_;
  std::vector<color_t> touched_;
};

}  // namespace

Coloring jp_color(const Graph& g, const PriorityDag& dag, JpStats* stats) {
  const vertex_t n = g.num_vertices();
  if (dag.pred_count.size() != n) throw std::invalid_argument("jp_color: DAG does not match the graph");
  Coloring out(n);
  auto& colors = out.colors;
  std::vector<vertex_t> remaining = dag.pred_count;
  std::vector<vertex_t> depth(n, 0);

  std::vector<vertex_t> roots;
  for (vertex_t v = 0; v < n; ++v)
    if (dag.pred_count[v] == 0) roots.push_back(v);
  if (n > 0 && roots.empty()) throw std::logic_error("jp_color: priority DAG has no root");

#pragma omp parallel
  {
    ScratchPalette palette(g.max_degree());
    std::vector<vertex_t> stack;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(roots.size()); ++i) {
      stack.push_back(roots[i]);
      while (!stack.empty()) {
        const vertex_t v = stack.back();
        stack.pop_back();
        colors[v] = palette.smallest_free(g, dag, colors, v);
        vertex_t d = 0;
        for (vertex_t u : g.neighbors(v))
          if (dag.higher(u, v)) d = std::max(d, depth[u]);
        depth[v] = d + 1;
        // Release our color; the successor whose counter we drop to zero
        // acquires every predecessor's color through the RMW chain.
        for (vertex_t u : g.neighbors(v)) {
          if (!dag.higher(v, u)) continue;
          if (std::atomic_ref<vertex_t>(remaining[u]).fetch_sub(1, std::memory_order_acq_rel) == 1)
            stack.push_back(u);
        }
      }
    }
  }

#ifndef NDEBUG
  for (vertex_t v = 0; v < n; ++v) assert(colors[v] > 0 && remaining[v] == 0);
#endif
  if (stats) stats->longest_path = n == 0 ? 0 : *std::max_element(depth.begin(), depth.end());
  return out;
}

}  // namespace adgcolor
