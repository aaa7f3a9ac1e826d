#include "pggnet/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "pggnet/errors.hpp"

namespace pggnet {

namespace {

using Slot = Graph::Slot;

Graph empty_graph(std::size_t n, Strategy strategy = Strategy::Defect) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_isolated_node(strategy);
  return g;
}

void wire_complete(Graph& g, std::size_t n) {
  for (Slot a = 0; a < n; ++a) {
    for (Slot b = a + 1; b < n; ++b) g.add_edge_slots(a, b);
  }
}

}  // namespace

Graph gen_founders(std::size_t count, Strategy strategy) {
  if (count < 2) {
    throw ConfigError("need at least 2 founders, got " + std::to_string(count),
                      "scenario.count");
  }
  Graph g = empty_graph(count, strategy);
  wire_complete(g, count);
  return g;
}

Graph gen_ring_lattice(std::size_t n, std::size_t k) {
  if (k < 2 || k % 2 != 0 || k >= n) {
    throw ConfigError("ring lattice needs N > k >= 2 with k even (N=" +
                      std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  Graph g = empty_graph(n);
  for (std::size_t offset = 1; offset <= k / 2; ++offset) {
    for (std::size_t i = 0; i < n; ++i) {
      // offset <= k/2 < N/2, so (i, i + offset) never repeats a pair.
      g.add_edge_slots(static_cast<Slot>(i), static_cast<Slot>((i + offset) % n));
    }
  }
  return g;
}

Graph gen_er_random(std::size_t n, std::size_t m, Rng& rng) {
  const std::size_t max_edges = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > max_edges) {
    throw ConfigError("G(N,M) with M=" + std::to_string(m) + " exceeds N(N-1)/2=" +
                      std::to_string(max_edges));
  }
  Graph g = empty_graph(n);
  if (2 * m > max_edges) {
    // Dense request: pick the edges to omit instead, so rejection stays cheap.
    std::vector<std::pair<Slot, Slot>> pairs;
    pairs.reserve(max_edges);
    for (Slot a = 0; a < n; ++a) {
      for (Slot b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto pick = i + rng.uniform_index(pairs.size() - i);
      std::swap(pairs[i], pairs[pick]);
      g.add_edge_slots(pairs[i].first, pairs[i].second);
    }
    return g;
  }
  std::size_t placed = 0;
  while (placed < m) {
    const auto a = static_cast<Slot>(rng.uniform_index(n));
    const auto b = static_cast<Slot>(rng.uniform_index(n));
    if (a == b || g.has_edge(g.id_at(a), g.id_at(b))) continue;
    g.add_edge_slots(a, b);
    ++placed;
  }
  return g;
}

Graph gen_barabasi_albert(std::size_t n, std::size_t m, Rng& rng) {
  if (m < 1 || n <= m) {
    throw ConfigError("Barabasi-Albert needs N > m >= 1 (N=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ")");
  }
  const std::size_t seed = std::min(n, std::max<std::size_t>(m + 1, 3));
  Graph g = empty_graph(n);
  wire_complete(g, seed);

  // Each edge contributes both endpoints, so a uniform pick from this list is
  // a degree-proportional pick of a node.
  std::vector<Slot> endpoints;
  endpoints.reserve(2 * (seed * (seed - 1) / 2 + (n - seed) * m));
  for (Slot a = 0; a < seed; ++a) {
    for (Slot b = a + 1; b < seed; ++b) {
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }

  std::vector<Slot> targets;
  for (auto v = static_cast<Slot>(seed); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      const Slot t = endpoints[rng.uniform_index(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (const Slot t : targets) {
      g.add_edge_slots(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return g;
}

NodeId add_node(Graph& graph, Strategy strategy, std::size_t m, Rng& rng) {
  const std::size_t existing = graph.size();
  if (m < 1 || existing < m) {
    throw PreconditionError("add_node needs at least m=" + std::to_string(m) +
                            " existing nodes, graph has " + std::to_string(existing));
  }
  // Targets are drawn before the node exists so it cannot pick itself.
  std::vector<Slot> targets;
  targets.reserve(m);
  while (targets.size() < m) {
    const auto t = static_cast<Slot>(rng.uniform_index(existing));
    if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
      targets.push_back(t);
    }
  }
  const NodeId id = graph.add_isolated_node(strategy);
  const Slot self = graph.slot_of(id);
  for (const Slot t : targets) graph.add_edge_slots(self, t);
  return id;
}

}  // namespace pggnet
