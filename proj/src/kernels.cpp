#include "pggnet/kernels.hpp"

#include <cstdint>
#include <vector>

namespace pggnet::kernels {

namespace {

using Slot = Graph::Slot;

// Per-member share of each game's pot, and what each node pays per game.
void game_terms(const Graph& g, const GameParams& p, std::vector<double>& share,
                std::vector<double>& cost_per_game) {
  const auto n = static_cast<std::int64_t>(g.size());
  const bool fcpi = p.variant == GameVariant::FCPI;
  const auto strategies = g.strategies();

#pragma omp parallel for schedule(static) if (g.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto s = static_cast<Slot>(i);
    const double group = static_cast<double>(g.degree(s) + 1);
    cost_per_game[s] =
        cooperates(strategies[s]) ? (fcpi ? p.c / group : p.c) : 0.0;
  }

#pragma omp parallel for schedule(static) if (g.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto x = static_cast<Slot>(i);
    const double group = static_cast<double>(g.degree(x) + 1);
    if (fcpi) {
      double pot = cost_per_game[x];
      for (const Slot v : g.neighbors(x)) pot += cost_per_game[v];
      share[x] = p.r / group * pot;
    } else {
      std::size_t n_c = cooperates(strategies[x]) ? 1 : 0;
      for (const Slot v : g.neighbors(x)) n_c += cooperates(strategies[v]) ? 1 : 0;
      share[x] = p.c * p.r * static_cast<double>(n_c) / group;
    }
  }
}

}  // namespace

void accumulate_fitness(Graph& graph, const GameParams& params) {
  const std::size_t size = graph.size();
  std::vector<double> share(size);
  std::vector<double> cost(size);
  game_terms(graph, params, share, cost);

  auto fitness = graph.fitness();
  const auto n = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto y = static_cast<Slot>(i);
    double total = share[y];
    for (const Slot x : graph.neighbors(y)) total += share[x];
    fitness[y] = total - static_cast<double>(graph.degree(y) + 1) * cost[y];
  }
}

PathSums all_pairs_path_sums(const Graph& graph) {
  const auto n = static_cast<std::int64_t>(graph.size());
  std::uint64_t hops = 0;
  std::uint64_t pairs = 0;

#pragma omp parallel reduction(+ : hops, pairs) if (graph.size() >= 256)
  {
    std::vector<std::uint32_t> dist(graph.size());
    std::vector<Slot> frontier;
    frontier.reserve(graph.size());
    constexpr auto kUnseen = static_cast<std::uint32_t>(-1);

#pragma omp for schedule(dynamic, 16)
    for (std::int64_t src = 0; src < n; ++src) {
      std::fill(dist.begin(), dist.end(), kUnseen);
      frontier.clear();
      dist[src] = 0;
      frontier.push_back(static_cast<Slot>(src));
      for (std::size_t head = 0; head < frontier.size(); ++head) {
        const Slot u = frontier[head];
        for (const Slot v : graph.neighbors(u)) {
          if (dist[v] == kUnseen) {
            dist[v] = dist[u] + 1;
            hops += dist[v];
            ++pairs;
            frontier.push_back(v);
          }
        }
      }
    }
  }
  return {hops, pairs};
}

}  // namespace pggnet::kernels
