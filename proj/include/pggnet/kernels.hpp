#pragma once

#include <cstdint>

#include "pggnet/game.hpp"
#include "pggnet/graph.hpp"

// Hot loops of the simulator. `kernels` holds the OpenMP versions used in
// production; `reference` holds straightforward serial versions that tests
// and the benchmark compare against. Callers validate preconditions.

namespace pggnet {

struct PathSums {
  std::uint64_t total_hops = 0;
  std::uint64_t reachable_pairs = 0;  // ordered, excluding (v, v)
};

namespace kernels {

/// Below this node count the kernels stay serial; region start-up costs more
/// than the work.
inline constexpr std::size_t kParallelThreshold = 4096;

/// Two passes: each game's per-member share, then a per-node gather over the
/// node's own game and its neighbours' games in adjacency order. Each node's
/// sum is formed by one thread in a fixed order, so the result is identical
/// for every thread count.
void accumulate_fitness(Graph& graph, const GameParams& params);

/// BFS from every node; sums are integers, so the reduction is exact.
PathSums all_pairs_path_sums(const Graph& graph);

}  // namespace kernels

namespace reference {

/// Game-by-game scatter: each initiator computes its pot and credits every
/// member using the single-game payoff functions.
void accumulate_fitness(Graph& graph, const GameParams& params);

PathSums all_pairs_path_sums(const Graph& graph);

}  // namespace reference

}  // namespace pggnet
