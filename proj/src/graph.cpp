#include "adgcolor/graph.hpp"

#include <algorithm>

namespace adgcolor {

Graph::Graph() : offsets_(1, 0) {}

Graph Graph::from_edges(vertex_t n, std::span<const EdgePair> edges, DuplicatePolicy policy) {
  std::vector<edge_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw StructuralError("edge endpoint out of range");
    if (u == v) {
      if (policy == DuplicatePolicy::reject)
        throw StructuralError("self-loop at vertex " + std::to_string(u));
      continue;
    }
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

  std::vector<vertex_t> adj(offsets.back());
  std::vector<edge_t> cursor(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[cursor[u]++] = v;
    adj[cursor[v]++] = u;
  }

  // Sort and deduplicate every segment, then compact.
  std::vector<edge_t> packed(offsets.size(), 0);
  edge_t write = 0;
  for (vertex_t v = 0; v < n; ++v) {
    auto first = adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    auto uniq = std::unique(first, last);
    if (uniq != last && policy == DuplicatePolicy::reject)
      throw StructuralError("duplicate edge at vertex " + std::to_string(v));
    for (auto it = first; it != uniq; ++it) adj[write++] = *it;
    packed[v + 1] = write;
  }
  adj.resize(write);
  adj.shrink_to_fit();

  Graph g;
  g.n_ = n;
  g.m_ = write / 2;
  g.offsets_ = std::move(packed);
  g.adj_ = std::move(adj);
  g.compute_degree_stats();
  return g;
}

Graph Graph::from_csr(std::vector<edge_t> offsets, std::vector<vertex_t> adjacency) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != adjacency.size())
    throw StructuralError("offsets must start at 0 and end at the adjacency length");
  if (adjacency.size() % 2 != 0) throw StructuralError("adjacency length must be even");
  const auto n = static_cast<vertex_t>(offsets.size() - 1);
  for (vertex_t v = 0; v < n; ++v) {
    if (offsets[v] > offsets[v + 1]) throw StructuralError("offsets must be nondecreasing");
    for (edge_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      vertex_t u = adjacency[i];
      if (u >= n) throw StructuralError("neighbor id out of range");
      if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(v));
      if (i > offsets[v] && adjacency[i - 1] >= u)
        throw StructuralError("neighbor segment of " + std::to_string(v) + " not strictly ascending");
    }
  }
  Graph g;
  g.n_ = n;
  g.m_ = adjacency.size() / 2;
  g.offsets_ = std::move(offsets);
  g.adj_ = std::move(adjacency);
  for (vertex_t v = 0; v < n; ++v)
    for (vertex_t u : g.neighbors(v))
      if (!g.has_edge(u, v)) throw StructuralError("adjacency is not symmetric");
  g.compute_degree_stats();
  return g;
}

bool Graph::has_edge(vertex_t u, vertex_t v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::average_degree() const noexcept {
  if (n_ == 0) return 0.0;
  return static_cast<double>(2 * m_) / static_cast<double>(n_);
}

void Graph::set_raw_ids(std::vector<std::uint64_t> ids) {
  if (!ids.empty() && ids.size() != n_) throw StructuralError("raw id table size mismatch");
  raw_ids_ = std::move(ids);
}

void Graph::compute_degree_stats() noexcept {
  max_deg_ = 0;
  min_deg_ = n_ == 0 ? 0 : degree(0);
  for (vertex_t v = 0; v < n_; ++v) {
    max_deg_ = std::max(max_deg_, degree(v));
    min_deg_ = std::min(min_deg_, degree(v));
  }
}

}  // namespace adgcolor
