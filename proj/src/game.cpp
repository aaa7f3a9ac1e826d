#include "pggnet/game.hpp"

#include <cmath>
#include <string>

#include "pggnet/errors.hpp"
#include "pggnet/kernels.hpp"

namespace pggnet {

GameParams GameParams::from_eta(GameVariant variant, double eta, double c,
                                double g_bar) {
  GameParams p;
  p.variant = variant;
  p.c = c;
  p.eta = eta;
  p.g_bar = g_bar;
  p.r = eta * g_bar;
  p.validate();
  return p;
}

void GameParams::validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("must be > 0", "game.c");
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw ConfigError("must be >= 0", "game.eta");
  if (!(g_bar > 0.0) || !std::isfinite(g_bar)) {
    throw ConfigError("must be > 0", "game.g_bar");
  }
  if (r != eta * g_bar) throw ConfigError("r must equal eta * g_bar", "game.r");
}

double fcpg_game_payoff(bool is_cooperator, std::size_t n_c, std::size_t k_x,
                        const GameParams& params) {
  if (params.variant != GameVariant::FCPG) {
    throw PreconditionError("fcpg_game_payoff called with FCPI parameters");
  }
  if (n_c > k_x + 1) {
    throw PreconditionError("n_c=" + std::to_string(n_c) + " exceeds group size " +
                            std::to_string(k_x + 1));
  }
  const double defector =
      params.c * params.r * static_cast<double>(n_c) / static_cast<double>(k_x + 1);
  return is_cooperator ? defector - params.c : defector;
}

double fcpi_game_payoff(const Graph& graph, NodeId x, NodeId y,
                        const GameParams& params) {
  if (params.variant != GameVariant::FCPI) {
    throw PreconditionError("fcpi_game_payoff called with FCPG parameters");
  }
  const auto sx = graph.slot_of(x);
  const auto sy = graph.slot_of(y);
  if (sx != sy && !graph.has_edge(x, y)) {
    throw PreconditionError("node " + std::to_string(raw(y)) +
                            " is not a member of the game of node " +
                            std::to_string(raw(x)));
  }
  auto contribution = [&](Graph::Slot s) {
    return cooperates(graph.strategy(s))
               ? params.c / static_cast<double>(graph.degree(s) + 1)
               : 0.0;
  };
  double pot = contribution(sx);
  for (const auto v : graph.neighbors(sx)) pot += contribution(v);
  return params.r / static_cast<double>(graph.degree(sx) + 1) * pot - contribution(sy);
}

std::span<const double> accumulate_fitness(Graph& graph, const GameParams& params) {
  if (!graph.empty() && graph.min_degree() == 0) {
    throw InvariantError("accumulate_fitness: graph contains an isolated node");
  }
  kernels::accumulate_fitness(graph, params);
  return graph.fitness();
}

}  // namespace pggnet
