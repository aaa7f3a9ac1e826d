#include <algorithm>
#include <deque>
#include <vector>

#include "pggnet/kernels.hpp"

namespace pggnet::reference {

void accumulate_fitness(Graph& graph, const GameParams& params) {
  auto fitness = graph.fitness();
  std::fill(fitness.begin(), fitness.end(), 0.0);

  for (Graph::Slot x = 0; x < graph.size(); ++x) {
    std::vector<Graph::Slot> members{x};
    members.insert(members.end(), graph.neighbors(x).begin(), graph.neighbors(x).end());

    if (params.variant == GameVariant::FCPG) {
      const auto n_c = static_cast<std::size_t>(
          std::count_if(members.begin(), members.end(),
                        [&](auto s) { return cooperates(graph.strategy(s)); }));
      for (const auto y : members) {
        fitness[y] += fcpg_game_payoff(cooperates(graph.strategy(y)), n_c,
                                       graph.degree(x), params);
      }
    } else {
      for (const auto y : members) {
        fitness[y] += fcpi_game_payoff(graph, graph.id_at(x), graph.id_at(y), params);
      }
    }
  }
}

PathSums all_pairs_path_sums(const Graph& graph) {
  PathSums sums;
  const std::size_t n = graph.size();
  for (Graph::Slot src = 0; src < n; ++src) {
    std::vector<long> dist(n, -1);
    std::deque<Graph::Slot> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (const auto v : graph.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (Graph::Slot v = 0; v < n; ++v) {
      if (v != src && dist[v] > 0) {
        sums.total_hops += static_cast<std::uint64_t>(dist[v]);
        ++sums.reachable_pairs;
      }
    }
  }
  return sums;
}

}  // namespace pggnet::reference
