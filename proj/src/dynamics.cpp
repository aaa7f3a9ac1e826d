#include "pggnet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "pggnet/errors.hpp"
#include "pggnet/generators.hpp"

namespace pggnet {

namespace {
// Absorbs representation error in products like 0.01 * 1000.
constexpr double kRoundingSlack = 1e-9;
}  // namespace

void DynamicsParams::validate() const {
  if (m < 1) throw ConfigError("must be >= 1", "dynamics.m");
  if (nodes_per_generation < 1) {
    throw ConfigError("must be >= 1", "dynamics.nodes_per_generation");
  }
  if (max_size <= m) throw ConfigError("must exceed dynamics.m", "dynamics.max_size");
  if (!(shrink_fraction >= 0.0 && shrink_fraction < 1.0)) {
    throw ConfigError("must lie in [0, 1)", "dynamics.shrink_fraction");
  }
  if (!(tournament_fraction > 0.0 && tournament_fraction <= 1.0)) {
    throw ConfigError("must lie in (0, 1]", "dynamics.tournament_fraction");
  }
  if (fluctuation_enabled && shortlist_size(max_size) < 1) {
    throw ConfigError("shrink_fraction * max_size must be >= 1 when fluctuating",
                      "dynamics.shrink_fraction");
  }
}

std::size_t DynamicsParams::shortlist_size(std::size_t n) const {
  return static_cast<std::size_t>(
      std::floor(shrink_fraction * static_cast<double>(n) + kRoundingSlack));
}

std::size_t DynamicsParams::tournament_size(std::size_t n) const {
  return static_cast<std::size_t>(
      std::ceil(tournament_fraction * static_cast<double>(n) - kRoundingSlack));
}

std::size_t grow(Graph& graph, const DynamicsParams& params, Rng& rng) {
  if (graph.size() >= params.max_size) return 0;
  const std::size_t count =
      std::min(params.nodes_per_generation, params.max_size - graph.size());
  for (std::size_t i = 0; i < count; ++i) {
    const Strategy s = rng.coin() ? Strategy::Cooperate : Strategy::Defect;
    add_node(graph, s, params.m, rng);
  }
  return count;
}

std::vector<NodeId> tournament_shortlist(const Graph& graph,
                                         const DynamicsParams& params, Rng& rng) {
  const std::size_t n = graph.size();
  const std::size_t wanted = params.shortlist_size(n);
  if (wanted == 0) {
    throw ConfigError("shortlist would be empty at N=" + std::to_string(n),
                      "dynamics.shrink_fraction");
  }
  const std::size_t tsize = std::max<std::size_t>(1, params.tournament_size(n));

  // 0 = available, 1 = shortlisted, 2 = in the current tournament.
  std::vector<std::uint8_t> mark(n, 0);
  std::vector<Graph::Slot> members;
  std::vector<NodeId> shortlist;
  shortlist.reserve(wanted);

  while (shortlist.size() < wanted) {
    const std::size_t available = n - shortlist.size();
    const std::size_t size = std::min(tsize, available);
    members.clear();
    while (members.size() < size) {
      const auto s = static_cast<Graph::Slot>(rng.uniform_index(n));
      if (mark[s] != 0) continue;
      mark[s] = 2;
      members.push_back(s);
    }

    Graph::Slot winner = members.front();
    std::size_t ties = 1;
    for (std::size_t i = 1; i < members.size(); ++i) {
      const Graph::Slot s = members[i];
      if (graph.fitness(s) < graph.fitness(winner)) {
        winner = s;
        ties = 1;
      } else if (graph.fitness(s) == graph.fitness(winner)) {
        // Reservoir step: each of the tied members wins with probability 1/ties.
        ++ties;
        if (rng.uniform_index(ties) == 0) winner = s;
      }
    }

    for (const Graph::Slot s : members) mark[s] = 0;
    mark[winner] = 1;
    shortlist.push_back(graph.id_at(winner));
  }
  return shortlist;
}

AttritionReport prune(Graph& graph, const DynamicsParams& params, Rng& rng) {
  const std::size_t before = graph.size();
  const auto shortlist = tournament_shortlist(graph, params, rng);
  const RemovalReport removed = graph.remove_nodes(shortlist);
  AttritionReport report;
  report.shortlisted = removed.listed;
  report.cascaded = removed.cascaded;
  report.survivors = graph.size();
  if (report.survivors != before - report.shortlisted - report.cascaded) {
    throw InvariantError("attrition accounting mismatch");
  }
  return report;
}

}  // namespace pggnet
