#pragma once

#include <cstddef>
#include <span>

#include "pggnet/graph.hpp"

namespace pggnet {

enum class GameVariant { FCPG, FCPI };

/// Public goods game parameters. `r` is always derived as eta * g_bar.
struct GameParams {
  GameVariant variant = GameVariant::FCPG;
  double c = 1.0;
  double eta = 0.0;
  double g_bar = 5.0;
  double r = 0.0;

  static GameParams from_eta(GameVariant variant, double eta, double c = 1.0,
                             double g_bar = 5.0);

  /// Throws ConfigError for c <= 0, eta < 0, g_bar <= 0, or r != eta * g_bar.
  void validate() const;
};

/// Single-game payoff to a member of x's game under fixed cost per game.
/// `n_c` counts cooperators among x and its `k_x` neighbours.
double fcpg_game_payoff(bool is_cooperator, std::size_t n_c, std::size_t k_x,
                        const GameParams& params);

/// Payoff to `y` from the game initiated by `x` under fixed cost per
/// individual. `y` must be x itself or one of its neighbours.
double fcpi_game_payoff(const Graph& graph, NodeId x, NodeId y,
                        const GameParams& params);

/// Overwrites every node's fitness with the sum of its payoffs over the
/// k + 1 games it joins (its own and each neighbour's). Throws
/// InvariantError if any node has degree 0.
std::span<const double> accumulate_fitness(Graph& graph, const GameParams& params);

}  // namespace pggnet
