#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adgcolor {

using vertex_t = std::uint32_t;
using edge_t = std::uint64_t;
using color_t = std::int32_t;

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input that parses but violates the simple-graph requirements.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DuplicatePolicy { dedup, reject };

using EdgePair = std::pair<vertex_t, vertex_t>;

// Undirected simple graph in CSR form. Neighbor segments are sorted strictly
// ascending, contain no self-loops and are symmetric. Immutable once built, so
// a const Graph can be shared freely between threads.
class Graph {
 public:
  Graph();

  /// Builds from an unordered edge list over vertices 0..n-1. Under `dedup`,
  /// self-loops and parallel edges are dropped; under `reject` they throw.
  static Graph from_edges(vertex_t n, std::span<const EdgePair> edges,
                          DuplicatePolicy policy = DuplicatePolicy::dedup);

  /// Adopts CSR arrays after checking every structural invariant.
  static Graph from_csr(std::vector<edge_t> offsets, std::vector<vertex_t> adjacency);

  vertex_t num_vertices() const noexcept { return n_; }
  edge_t num_edges() const noexcept { return m_; }

  vertex_t degree(vertex_t v) const noexcept {
    return static_cast<vertex_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  bool has_edge(vertex_t u, vertex_t v) const noexcept;

  std::span<const edge_t> offsets() const noexcept { return offsets_; }
  std::span<const vertex_t> adjacency() const noexcept { return adj_; }

  vertex_t max_degree() const noexcept { return max_deg_; }
  vertex_t min_degree() const noexcept { return min_deg_; }
  double average_degree() const noexcept;

  /// Original ids of the loaded file, indexed by dense id. Empty for graphs
  /// built in memory.
  std::span<const std::uint64_t> raw_ids() const noexcept { return raw_ids_; }
  void set_raw_ids(std::vector<std::uint64_t> ids);

  /// Structural equality (raw-id sidecar ignored).
  bool operator==(const Graph& other) const noexcept {
    return n_ == other.n_ && offsets_ == other.offsets_ && adj_ == other.adj_;
  }

 private:
  void compute_degree_stats() noexcept;

  vertex_t n_ = 0;
  edge_t m_ = 0;
  std::vector<edge_t> offsets_;
  std::vector<vertex_t> adj_;
  std::vector<std::uint64_t> raw_ids_;
  vertex_t max_deg_ = 0;
  vertex_t min_deg_ = 0;
};

}  // namespace adgcolor
