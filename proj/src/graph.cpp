#include "pggnet/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "pggnet/errors.hpp"

namespace pggnet {

std::uint64_t Graph::edge_key(std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  return (a << 32) | b;
}

NodeId Graph::add_isolated_node(Strategy strategy) {
  if (next_id_ > std::numeric_limits<std::uint32_t>::max()) {
    throw InvariantError("node id space exhausted");
  }
  const NodeId id{next_id_++};
  const auto slot = static_cast<Slot>(ids_.size());
  ids_.push_back(id);
  adjacency_.emplace_back();
  strategies_.push_back(strategy);
  fitness_.push_back(0.0);
  slot_by_id_.emplace(raw(id), slot);
  return id;
}

Graph::Slot Graph::slot_of(NodeId id) const {
  const auto it = slot_by_id_.find(raw(id));
  if (it == slot_by_id_.end()) {
    throw PreconditionError("unknown node id " + std::to_string(raw(id)));
  }
  return it->second;
}

void Graph::add_edge(NodeId a, NodeId b) { add_edge_slots(slot_of(a), slot_of(b)); }

void Graph::add_edge_slots(Slot a, Slot b) {
  if (a == b) throw PreconditionError("self-edges are not allowed");
  if (!edges_.insert(edge_key(raw(ids_[a]), raw(ids_[b]))).second) {
    throw PreconditionError("duplicate edge " + std::to_string(raw(ids_[a])) +
                            "-" + std::to_string(raw(ids_[b])));
  }
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  return edges_.contains(edge_key(raw(a), raw(b)));
}

void Graph::erase_from_adjacency(Slot owner, Slot target) {
  auto& list = adjacency_[owner];
  list.erase(std::find(list.begin(), list.end(), target));
}

// Moves the last slot into `s`. `s` must already have no edges.
void Graph::drop_slot(Slot s) {
  const auto last = static_cast<Slot>(ids_.size() - 1);
  slot_by_id_.erase(raw(ids_[s]));
  if (s != last) {
    for (const Slot v : adjacency_[last]) {
      std::replace(adjacency_[v].begin(), adjacency_[v].end(), last, s);
    }
    ids_[s] = ids_[last];
    adjacency_[s] = std::move(adjacency_[last]);
    strategies_[s] = strategies_[last];
    fitness_[s] = fitness_[last];
    slot_by_id_[raw(ids_[s])] = s;
  }
  ids_.pop_back();
  adjacency_.pop_back();
  strategies_.pop_back();
  fitness_.pop_back();
}

RemovalReport Graph::remove_nodes(std::span<const NodeId> ids) {
  std::vector<Slot> listed;
  listed.reserve(ids.size());
  for (const NodeId id : ids) listed.push_back(slot_of(id));
  std::sort(listed.begin(), listed.end());
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());

  RemovalReport report;
  report.listed = listed.size();

  for (const Slot s : listed) {
    for (const Slot v : adjacency_[s]) {
      edges_.erase(edge_key(raw(ids_[s]), raw(ids_[v])));
      erase_from_adjacency(v, s);
    }
    adjacency_[s].clear();
  }

  // Isolated nodes have no edges, so deleting them cannot isolate anyone
  // else: a single sweep reaches the fixed point.
  std::vector<Slot> dead = listed;
  for (Slot s = 0; s < ids_.size(); ++s) {
    if (adjacency_[s].empty() &&
        !std::binary_search(listed.begin(), listed.end(), s)) {
      dead.push_back(s);
      ++report.cascaded;
    }
  }

  std::sort(dead.begin(), dead.end(), std::greater<>());
  for (const Slot s : dead) drop_slot(s);
  return report;
}

std::size_t Graph::remove_isolated() {
  return remove_nodes({}).cascaded;
}

std::size_t Graph::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return empty() ? 0 : best;
}

double Graph::mean_degree() const {
  return empty() ? 0.0
                 : 2.0 * static_cast<double>(edge_count()) /
                       static_cast<double>(size());
}

std::size_t Graph::cooperator_count() const {
  return static_cast<std::size_t>(
      std::count(strategies_.begin(), strategies_.end(), Strategy::Cooperate));
}

void Graph::check_invariants() const {
  const std::size_t n = ids_.size();
  if (adjacency_.size() != n || strategies_.size() != n || fitness_.size() != n ||
      slot_by_id_.size() != n) {
    throw InvariantError("per-node arrays out of sync");
  }
  std::size_t degree_sum = 0;
  for (Slot s = 0; s < n; ++s) {
    const auto it = slot_by_id_.find(raw(ids_[s]));
    if (it == slot_by_id_.end() || it->second != s) {
      throw InvariantError("id map does not match slot " + std::to_string(s));
    }
    if (raw(ids_[s]) >= next_id_) throw InvariantError("id beyond issue counter");
    auto sorted = adjacency_[s];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvariantError("duplicate edge at slot " + std::to_string(s));
    }
    for (const Slot v : adjacency_[s]) {
      if (v == s) throw InvariantError("self-edge at slot " + std::to_string(s));
      if (v >= n) throw InvariantError("dangling neighbour slot");
      const auto& back = adjacency_[v];
      if (std::find(back.begin(), back.end(), s) == back.end()) {
        throw InvariantError("asymmetric adjacency at slot " + std::to_string(s));
      }
      if (!edges_.contains(edge_key(raw(ids_[s]), raw(ids_[v])))) {
        throw InvariantError("edge missing from edge set");
      }
    }
    degree_sum += adjacency_[s].size();
  }
  if (degree_sum != 2 * edges_.size()) {
    throw InvariantError("degree sum " + std::to_string(degree_sum) +
                         " != 2 x edge count " + std::to_string(edges_.size()));
  }
}

}  // namespace pggnet
