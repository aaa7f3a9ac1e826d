#pragma once

#include <cstddef>

#include "pggnet/graph.hpp"
#include "pggnet/rng.hpp"

namespace pggnet {

/// Complete graph on `count` founders, all playing `strategy`.
/// Throws ConfigError when count < 2.
Graph gen_founders(std::size_t count, Strategy strategy);

/// Circulant ring: each node linked to its k/2 nearest neighbours per side.
/// Requires N > k >= 2 with k even.
Graph gen_ring_lattice(std::size_t n, std::size_t k);

/// G(N, M): exactly M distinct edges chosen uniformly among all pairs.
Graph gen_er_random(std::size_t n, std::size_t m, Rng& rng);

/// Preferential attachment grown from a complete seed on max(m + 1, 3)
/// nodes; each new node draws m distinct targets with probability
/// proportional to degree.
Graph gen_barabasi_albert(std::size_t n, std::size_t m, Rng& rng);

/// Chronological random attachment: adds one node wired to m distinct
/// existing nodes drawn uniformly without replacement.
/// Throws PreconditionError when the graph has fewer than m nodes.
NodeId add_node(Graph& graph, Strategy strategy, std::size_t m, Rng& rng);

}  // namespace pggnet
