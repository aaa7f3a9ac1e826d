#pragma once

#include <cstddef>
#include <span>

#include "pggnet/graph.hpp"
#include "pggnet/rng.hpp"

namespace pggnet {

struct UpdateReport {
  std::size_t changed = 0;
  std::size_t evaluated = 0;
};

/// Probability that node i copies neighbour j: zero unless f_j > f_i, then
/// (f_j - f_i) / max(k_i, k_j), clamped to 1.
double replacement_probability(double f_i, double f_j, std::size_t k_i,
                               std::size_t k_j);

/// Synchronous imitation step. Every node picks one neighbour uniformly and
/// decides against a frozen snapshot of strategies and fitness; all
/// replacements are applied together at the end.
///
/// RNG use per node, in slot order: one draw for the neighbour, then one
/// uniform draw only when the replacement probability is positive.
UpdateReport update_strategies(Graph& graph, Rng& rng);

/// Same step with an explicit visiting order (a permutation of all slots).
UpdateReport update_strategies(Graph& graph, Rng& rng,
                               std::span<const Graph::Slot> order);

}  // namespace pggnet
