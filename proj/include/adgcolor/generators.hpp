#pragma once

#include <cstdint>

#include "adgcolor/graph.hpp"

namespace adgcolor {

/// G(n, p): every unordered pair independently with probability p.
/// Deterministic for fixed (n, p, seed). Uses geometric skipping, so the cost
/// is O(n + m) rather than O(n^2).
Graph generate_er(vertex_t n, double p, std::uint64_t seed);

/// R-MAT / Kronecker: 2^scale vertices, edge_factor * 2^scale sampled pairs,
/// symmetrized, self-loops and duplicates dropped. d = 1 - a - b - c.
Graph generate_rmat(unsigned scale, unsigned edge_factor, double a, double b, double c,
                    std::uint64_t seed);

// Small fixtures.
Graph empty_graph(vertex_t n);
Graph complete_graph(vertex_t n);
Graph cycle_graph(vertex_t n);
Graph path_graph(vertex_t n);
/// Center 0 plus `leaves` leaves 1..leaves.
Graph star_graph(vertex_t leaves);
Graph petersen_graph();

}  // namespace adgcolor
