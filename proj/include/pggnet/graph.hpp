#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace pggnet {

/// Stable node identifier. Issued sequentially by a Graph and never reused.
enum class NodeId : std::uint64_t {};

inline std::uint64_t raw(NodeId id) { return static_cast<std::uint64_t>(id); }

enum class Strategy : std::uint8_t { Defect = 0, Cooperate = 1 };

inline bool cooperates(Strategy s) { return s == Strategy::Cooperate; }

struct RemovalReport {
  std::size_t listed = 0;
  std::size_t cascaded = 0;
};

/// Undirected simple graph with per-node strategy and fitness.
///
/// Nodes live in dense slots [0, size()) so that uniform sampling and the
/// per-generation kernels are plain index loops. Removal swaps the last slot
/// into the hole, so a node's slot can change after remove_nodes(); its
/// NodeId never does.
class Graph {
 public:
  using Slot = std::uint32_t;

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Adds a node with no edges and fitness 0. Callers must connect it before
  /// the next game round; remove_nodes() deletes any node left isolated.
  NodeId add_isolated_node(Strategy strategy);

  /// Throws PreconditionError on self-edges, duplicates, or unknown ids.
  void add_edge(NodeId a, NodeId b);
  void add_edge_slots(Slot a, Slot b);

  bool has_edge(NodeId a, NodeId b) const;
  bool contains(NodeId id) const { return slot_by_id_.contains(raw(id)); }

  Slot slot_of(NodeId id) const;
  NodeId id_at(Slot s) const { return ids_[s]; }

  std::span<const Slot> neighbors(Slot s) const { return adjacency_[s]; }
  std::size_t degree(Slot s) const { return adjacency_[s].size(); }

  Strategy strategy(Slot s) const { return strategies_[s]; }
  void set_strategy(Slot s, Strategy v) { strategies_[s] = v; }
  std::span<const Strategy> strategies() const { return strategies_; }

  double fitness(Slot s) const { return fitness_[s]; }
  std::span<double> fitness() { return fitness_; }
  std::span<const double> fitness() const { return fitness_; }

  /// Deletes the listed nodes with their edges, then every node left with
  /// degree 0 anywhere in the graph. Unknown ids throw before any mutation;
  /// repeated ids count once.
  RemovalReport remove_nodes(std::span<const NodeId> ids);

  /// Deletes every degree-0 node; returns how many were removed.
  std::size_t remove_isolated();

  /// Number of NodeIds issued so far (dead or alive).
  std::uint64_t ids_issued() const { return next_id_; }

  std::size_t min_degree() const;
  double mean_degree() const;
  std::size_t cooperator_count() const;

  /// Checks symmetry, simplicity, the degree sum and the id maps. Throws
  /// InvariantError describing the first violation found.
  void check_invariants() const;

 private:
  static std::uint64_t edge_key(std::uint64_t a, std::uint64_t b);
  void erase_from_adjacency(Slot owner, Slot target);
  void drop_slot(Slot s);

  std::vector<NodeId> ids_;
  std::vector<std::vector<Slot>> adjacency_;
  std::vector<Strategy> strategies_;
  std::vector<double> fitness_;
  std::unordered_map<std::uint64_t, Slot> slot_by_id_;
  std::unordered_set<std::uint64_t> edges_;
  std::uint64_t next_id_ = 0;
};

}  // namespace pggnet
