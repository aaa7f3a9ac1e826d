#pragma once

#include <cstddef>
#include <vector>

#include "pggnet/graph.hpp"
#include "pggnet/rng.hpp"

namespace pggnet {

struct DynamicsParams {
  std::size_t nodes_per_generation = 10;
  std::size_t m = 2;                    // edges per new node
  std::size_t max_size = 1000;          // carrying capacity
  double shrink_fraction = 0.025;       // X
  double tournament_fraction = 0.01;
  bool fluctuation_enabled = true;

  /// Throws ConfigError naming the offending `dynamics.*` field.
  void validate() const;

  std::size_t shortlist_size(std::size_t n) const;   // floor(X * N)
  std::size_t tournament_size(std::size_t n) const;  // ceil(fraction * N)
};

struct AttritionReport {
  std::size_t shortlisted = 0;
  std::size_t cascaded = 0;
  std::size_t survivors = 0;
};

/// Adds min(nodes_per_generation, max_size - N) nodes by random attachment,
/// each cooperating with probability 1/2. Returns the number added.
std::size_t grow(Graph& graph, const DynamicsParams& params, Rng& rng);

/// Repeated tournaments over the not-yet-shortlisted nodes; each tournament's
/// least-fit member joins the shortlist, ties broken uniformly.
std::vector<NodeId> tournament_shortlist(const Graph& graph,
                                         const DynamicsParams& params, Rng& rng);

/// Deletes a tournament shortlist plus any nodes it leaves isolated.
AttritionReport prune(Graph& graph, const DynamicsParams& params, Rng& rng);

}  // namespace pggnet
