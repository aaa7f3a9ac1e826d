#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pggnet/dynamics.hpp"
#include "pggnet/game.hpp"
#include "pggnet/graph.hpp"
#include "pggnet/rng.hpp"

namespace pggnet {

struct Founders {
  std::size_t count = 3;
  Strategy strategy = Strategy::Defect;
};

enum class Topology { Regular, Random, ScaleFree };

/// A network built at the carrying capacity: ring(N, 4), G(N, 2N) or
/// preferential attachment with m = 2, strategies drawn with p = 1/2.
struct PreExisting {
  Topology topology = Topology::Regular;
};

using Scenario = std::variant<Founders, PreExisting>;

struct SimConfig {
  Scenario scenario = Founders{};
  GameParams game = GameParams::from_eta(GameVariant::FCPG, 0.0);
  DynamicsParams dynamics;
  std::size_t generations = 20000;
  std::size_t replicates = 25;
  std::uint64_t base_seed = 0;
  std::size_t record_window = 20;

  void validate() const;
};

/// State recorded after strategy updating, before attrition and growth.
/// nodes_added / nodes_removed describe the rest of the same generation.
struct GenerationRecord {
  std::size_t generation = 0;
  std::size_t n = 0;
  double cooperator_fraction = 0.0;
  double mean_degree = 0.0;
  std::size_t changed_strategies = 0;
  std::size_t nodes_added = 0;
  std::size_t nodes_removed = 0;
};

struct TimeSeries {
  SimConfig config;
  std::uint64_t seed = 0;
  GenerationRecord initial;               // generation 0, before any play
  std::vector<GenerationRecord> records;  // generations 1..config.generations
  Graph final_graph;
};

struct ReplicateSet {
  std::vector<TimeSeries> runs;
  std::vector<double> final_cooperation;
  double mean = 0.0;
  double ci95 = 0.0;
};

std::string to_string(Topology topology);
std::string to_string(GameVariant variant);
std::string to_string(Strategy strategy);

/// "founders_cooperate", "founders_defect" or "preexisting".
std::string scenario_label(const Scenario& scenario);
/// "cra" for founder-grown networks, else the pre-existing topology name.
std::string topology_label(const Scenario& scenario);

/// Founder runs always grow toward the cap; pre-existing runs grow only when
/// fluctuating (a static pre-existing network keeps its structure).
bool growth_enabled(const SimConfig& config);

/// Initial network for the scenario. Pre-existing networks have their
/// isolated nodes removed, as after any prune.
Graph build_initial_graph(const SimConfig& config, Rng& rng);

/// One generation: play, update, record, prune (if fluctuating and N >= cap),
/// grow (if enabled).
GenerationRecord run_generation(Graph& graph, const SimConfig& config, Rng& rng,
                                std::size_t generation);

/// The seed of replicate i is base_seed + i.
TimeSeries run_simulation(const SimConfig& config, std::size_t replicate_index);

/// Runs every replicate, concurrently when threads != 1 (0 = OpenMP default).
/// The result does not depend on the thread count.
ReplicateSet run_replicates(const SimConfig& config, int threads = 0);

}  // namespace pggnet
