#include "pggnet/evolution.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "pggnet/errors.hpp"

namespace pggnet {

double replacement_probability(double f_i, double f_j, std::size_t k_i,
                               std::size_t k_j) {
  if (!(f_i < f_j)) return 0.0;
  const auto scale = static_cast<double>(std::max(k_i, k_j));
  return std::min(1.0, (f_j - f_i) / scale);
}

UpdateReport update_strategies(Graph& graph, Rng& rng,
                               std::span<const Graph::Slot> order) {
  const std::size_t n = graph.size();
  if (order.size() != n) {
    throw PreconditionError("visiting order must cover every node exactly once");
  }
  const std::vector<Strategy> before(graph.strategies().begin(),
                                     graph.strategies().end());
  std::vector<Strategy> after = before;
  const auto fitness = std::as_const(graph).fitness();

  UpdateReport report;
  report.evaluated = n;
  for (const Graph::Slot i : order) {
    const auto neighbors = graph.neighbors(i);
    if (neighbors.empty()) {
      throw InvariantError("update_strategies: node without neighbours");
    }
    const Graph::Slot j = neighbors[rng.uniform_index(neighbors.size())];
    const double p =
        replacement_probability(fitness[i], fitness[j], neighbors.size(), graph.degree(j));
    if (p > 0.0 && rng.bernoulli(p)) after[i] = before[j];
  }
  for (Graph::Slot i = 0; i < n; ++i) {
    if (after[i] != before[i]) {
      graph.set_strategy(i, after[i]);
      ++report.changed;
    }
  }
  return report;
}

UpdateReport update_strategies(Graph& graph, Rng& rng) {
  std::vector<Graph::Slot> order(graph.size());
  std::iota(order.begin(), order.end(), Graph::Slot{0});
  return update_strategies(graph, rng, order);
}

}  // namespace pggnet
