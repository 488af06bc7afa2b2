#pragma once

#include <vector>

#include "adgcolor/coloring.hpp"
#include "adgcolor/graph.hpp"
#include "adgcolor/ordering.hpp"

namespace adgcolor {

// G oriented by a priority: edge {u, v} points u -> v iff u precedes v.
// Successor lists are not materialized; they are read off the graph and the
// priority. Holds a pointer to the ordering, which must outlive the DAG.
struct PriorityDag {
  std::vector<vertex_t> pred_count;
  const OrderingResult* priority = nullptr;

  bool higher(vertex_t u, vertex_t v) const noexcept { return priority->higher(u, v); }
};

/// Part 1 of JP: count higher-priority neighbors of every vertex.
PriorityDag build_dag(const Graph& g, const OrderingResult& order);

/// Adopts the predecessor counts produced alongside an ADG-O ordering.
PriorityDag dag_from_fused(const FusedOrdering& fused);

struct JpStats {
  vertex_t longest_path = 0;  ///< vertices on the longest path of the DAG
};

/// Jones-Plassmann: a vertex takes the smallest color absent from its
/// predecessors once all of them are colored. The result depends only on
/// (g, priority), never on the thread count or schedule.
Coloring jp_color(const Graph& g, const PriorityDag& dag, JpStats* stats = nullptr);

}  // namespace adgcolor
