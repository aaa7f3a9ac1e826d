#pragma once

// Test-only helpers: random graph builders and independent brute-force
// oracles. Nothing here calls the kernels it is used to check.

#include <cstddef>
#include <utility>
#include <vector>

#include "pggnet/game.hpp"
#include "pggnet/graph.hpp"
#include "pggnet/rng.hpp"

namespace pggnet::test {

/// Random simple graph on n nodes with edge probability p, patched so that
/// no node is isolated. Strategies are random.
inline Graph random_connected_enough(std::size_t n, double p, Rng& rng) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) {
    g.add_isolated_node(rng.coin() ? Strategy::Cooperate : Strategy::Defect);
  }
  for (Graph::Slot a = 0; a < n; ++a) {
    for (Graph::Slot b = a + 1; b < n; ++b) {
      if (rng.uniform01() < p) g.add_edge_slots(a, b);
    }
  }
  for (Graph::Slot a = 0; a < n; ++a) {
    if (g.degree(a) == 0) {
      Graph::Slot b = a;
      while (b == a) b = static_cast<Graph::Slot>(rng.uniform_index(n));
      g.add_edge_slots(a, b);
    }
  }
  return g;
}

inline Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                        Strategy strategy = Strategy::Defect) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_isolated_node(strategy);
  for (const auto& [a, b] : edges) {
    g.add_edge_slots(static_cast<Graph::Slot>(a), static_cast<Graph::Slot>(b));
  }
  return g;
}

/// Dense adjacency matrix copied out of a graph.
inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.size(), std::vector<bool>(g.size(), false));
  for (Graph::Slot s = 0; s < g.size(); ++s) {
    for (const auto v : g.neighbors(s)) a[s][v] = true;
  }
  return a;
}

/// Materialises every game's member list, pot and split from the adjacency
/// matrix and returns the per-node sum of payoffs.
inline std::vector<double> brute_force_fitness(const Graph& g, const GameParams& p) {
  const auto adj = adjacency_matrix(g);
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) degree[i] += adj[i][j] ? 1 : 0;
  }
  auto coop = [&](std::size_t i) { return g.strategy(static_cast<Graph::Slot>(i)) == Strategy::Cooperate; };
  auto stake = [&](std::size_t i) {
    if (!coop(i)) return 0.0;
    return p.variant == GameVariant::FCPG ? p.c : p.c / static_cast<double>(degree[i] + 1);
  };

  std::vector<double> fitness(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> members{x};
    for (std::size_t y = 0; y < n; ++y) {
      if (adj[x][y]) members.push_back(y);
    }
    double pot = 0.0;
    for (const auto m : members) pot += stake(m);
    const double split = p.r * pot / static_cast<double>(members.size());
    for (const auto m : members) fitness[m] += split - stake(m);
  }
  return fitness;
}

/// Floyd-Warshall all-pairs distances; -1 for unreachable.
inline std::vector<std::vector<long>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.size();
  constexpr long kInf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, kInf));
  const auto adj = adjacency_matrix(g);
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  for (auto& row : d) {
    for (auto& v : row) {
      if (v >= kInf) v = -1;
    }
  }
  return d;
}

/// Mean over reachable ordered pairs (i != j) of the Floyd-Warshall distance.
inline double brute_force_aspl(const Graph& g) {
  const auto d = floyd_warshall(g);
  double sum = 0.0;
  double pairs = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i != j && d[i][j] > 0) {
        sum += static_cast<double>(d[i][j]);
        pairs += 1.0;
      }
    }
  }
  return pairs > 0 ? sum / pairs : 0.0;
}

}  // namespace pggnet::test
