#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "adgcolor/graph.hpp"

namespace adgcolor {

enum class OrderKind { adg, adg_m, adg_o, ff, random, lf, llf, sl, sll };

std::string_view to_string(OrderKind kind) noexcept;
std::optional<OrderKind> order_kind_from_string(std::string_view name) noexcept;

/// How ADG refreshes residual degrees after removing a round's set R.
enum class UpdateMode {
  push,  ///< each removed vertex atomically decrements its surviving neighbors
  pull,  ///< each survivor recounts its neighbors in R (no concurrent writes)
};

struct RoundStat {
  vertex_t active = 0;   ///< |U| at the start of the round
  vertex_t removed = 0;  ///< |R|
};

// A vertex priority function. Vertex u precedes v (is colored first by JP)
// iff (rank[u], tiebreak[u]) > (rank[v], tiebreak[v]) lexicographically,
// with the lower id winning on a full tie, so the combined order is total.
struct OrderingResult {
  OrderKind kind = OrderKind::ff;
  std::vector<std::uint64_t> rank;
  std::vector<std::uint64_t> tiebreak;
  std::uint32_t iterations = 0;
  double epsilon = 0.0;
  std::vector<RoundStat> rounds;  ///< per-round diagnostics of the peeling kinds

  /// rho-bar, the largest rank handed out.
  std::uint64_t max_rank() const noexcept;

  bool higher(vertex_t u, vertex_t v) const noexcept {
    if (rank[u] != rank[v]) return rank[u] > rank[v];
    if (tiebreak[u] != tiebreak[v]) return tiebreak[u] > tiebreak[v];
    return u < v;
  }
};

/// Seeded per-vertex tie-break key (pure function of (seed, v)).
std::uint64_t tiebreak_key(std::uint64_t seed, vertex_t v) noexcept;

/// Partial 2(1+eps)-approximate degeneracy ordering. Each round removes every
/// vertex of U whose residual degree is at most (1+eps) times the average
/// residual degree of U; rank = round index (1-based). Ties are broken by the
/// seeded tie-break key. Output is identical for both update modes and any
/// thread count. Throws std::invalid_argument unless eps > 0.
OrderingResult adg(const Graph& g, double epsilon, std::uint64_t seed,
                   UpdateMode mode = UpdateMode::push);

/// Median variant: each round removes the ceil(|U|/2) vertices of smallest
/// residual degree (ties by id). Partial 4-approximate.
OrderingResult adg_m(const Graph& g, std::uint64_t seed);

struct FusedOrdering {
  OrderingResult ordering;            ///< kind adg_o, rank is a total order 0..n-1
  std::vector<vertex_t> pred_count;   ///< neighbors ordered higher (JP in-degree)
  std::vector<std::uint32_t> round;   ///< ADG round in which each vertex left U
};

/// ADG with the contiguous [R(1) .. R(i) | U] layout: each round's R is
/// counting-sorted by residual degree and ranked consecutively, and the JP
/// predecessor counts are produced in the same pass.
FusedOrdering adg_fused(const Graph& g, double epsilon, std::uint64_t seed);

struct Decomposition {
  /// partitions[i] holds R(i+1), vertices in ascending id order.
  std::vector<std::vector<vertex_t>> partitions;
  /// deg_l(v): neighbors of v in its own partition or a later one.
  std::vector<vertex_t> degl;
  /// 1-based partition index of every vertex.
  std::vector<std::uint32_t> partition_of;
};

/// ADG that keeps every round's removal set as a low-degree partition.
Decomposition adg_decompose(const Graph& g, double epsilon_inner, std::uint64_t seed);

/// FF, R, LF, LLF, SL, SLL. Throws std::invalid_argument for the ADG kinds.
OrderingResult baseline_order(const Graph& g, OrderKind kind, std::uint64_t seed);

/// max_v |{u in N(v) : rank[u] >= rank[v]}| / d, or 0 when d == 0.
double check_partial_approx(const Graph& g, const OrderingResult& o, vertex_t d);

/// Same with the strict total order in place of rank >= rank.
double check_partial_approx_strict(const Graph& g, const OrderingResult& o, vertex_t d);

/// ceil(log n / log(1 + eps)) + 1, the worst-case ADG round count.
std::uint32_t adg_iteration_bound(vertex_t n, double epsilon);

/// ceil(log2 n) + 1, the worst-case ADG-M round count.
std::uint32_t adg_m_iteration_bound(vertex_t n);

}  // namespace adgcolor
