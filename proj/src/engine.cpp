#include "pggnet/engine.hpp"

#include <exception>
#include <string>

#include "pggnet/errors.hpp"
#include "pggnet/evolution.hpp"
#include "pggnet/generators.hpp"
#include "pggnet/metrics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pggnet {

namespace {

constexpr std::size_t kPreExistingRingK = 4;
constexpr std::size_t kPreExistingBaM = 2;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

GenerationRecord snapshot_record(const Graph& graph, std::size_t generation) {
  GenerationRecord rec;
  rec.generation = generation;
  rec.n = graph.size();
  rec.cooperator_fraction = graph.empty() ? 0.0 : cooperator_fraction(graph);
  rec.mean_degree = graph.mean_degree();
  return rec;
}

}  // namespace

void SimConfig::validate() const {
  game.validate();
  dynamics.validate();
  if (const auto* f = std::get_if<Founders>(&scenario)) {
    if (f->count < 2) throw ConfigError("must be >= 2", "scenario.count");
    if (f->count > dynamics.max_size) {
      throw ConfigError("must not exceed dynamics.max_size", "scenario.count");
    }
  }
  if (generations < 1) throw ConfigError("must be >= 1", "generations");
  if (replicates < 1) throw ConfigError("must be >= 1", "replicates");
  if (record_window < 1) throw ConfigError("must be >= 1", "record_window");
  if (generations < record_window) {
    throw ConfigError("must not exceed generations", "record_window");
  }
}

std::string to_string(Topology topology) {
  switch (topology) {
    case Topology::Regular: return "regular";
    case Topology::Random: return "random";
    case Topology::ScaleFree: return "scale_free";
  }
  return "unknown";
}

std::string to_string(GameVariant variant) {
  return variant == GameVariant::FCPG ? "FCPG" : "FCPI";
}

std::string to_string(Strategy strategy) {
  return cooperates(strategy) ? "cooperate" : "defect";
}

std::string scenario_label(const Scenario& scenario) {
  return std::visit(Overloaded{
                        [](const Founders& f) { return "founders_" + to_string(f.strategy); },
                        [](const PreExisting&) { return std::string("preexisting"); },
                    },
                    scenario);
}

std::string topology_label(const Scenario& scenario) {
  return std::visit(Overloaded{
                        [](const Founders&) { return std::string("cra"); },
                        [](const PreExisting& p) { return to_string(p.topology); },
                    },
                    scenario);
}

bool growth_enabled(const SimConfig& config) {
  return std::holds_alternative<Founders>(config.scenario) ||
         config.dynamics.fluctuation_enabled;
}

Graph build_initial_graph(const SimConfig& config, Rng& rng) {
  if (const auto* f = std::get_if<Founders>(&config.scenario)) {
    return gen_founders(f->count, f->strategy);
  }
  const auto topology = std::get<PreExisting>(config.scenario).topology;
  const std::size_t n = config.dynamics.max_size;
  Graph graph;
  switch (topology) {
    case Topology::Regular: graph = gen_ring_lattice(n, kPreExistingRingK); break;
    case Topology::Random: graph = gen_er_random(n, 2 * n, rng); break;
    case Topology::ScaleFree: graph = gen_barabasi_albert(n, kPreExistingBaM, rng); break;
  }
  for (Graph::Slot s = 0; s < graph.size(); ++s) {
    graph.set_strategy(s, rng.coin() ? Strategy::Cooperate : Strategy::Defect);
  }
  graph.remove_isolated();
  return graph;
}

GenerationRecord run_generation(Graph& graph, const SimConfig& config, Rng& rng,
                                std::size_t generation) {
  if (graph.size() < 2) {
    throw PreconditionError("run_generation needs at least 2 nodes");
  }
  accumulate_fitness(graph, config.game);
  const UpdateReport update = update_strategies(graph, rng);

  GenerationRecord rec = snapshot_record(graph, generation);
  rec.changed_strategies = update.changed;

  const auto& dyn = config.dynamics;
  if (dyn.fluctuation_enabled && graph.size() >= dyn.max_size) {
    const AttritionReport attrition = prune(graph, dyn, rng);
    rec.nodes_removed = attrition.shortlisted + attrition.cascaded;
  }
  if (growth_enabled(config)) rec.nodes_added = grow(graph, dyn, rng);
  return rec;
}

TimeSeries run_simulation(const SimConfig& config, std::size_t replicate_index) {
  config.validate();
  TimeSeries series;
  series.config = config;
  series.seed = config.base_seed + replicate_index;

  Rng rng(series.seed);
  Graph graph = build_initial_graph(config, rng);
  series.initial = snapshot_record(graph, 0);
  series.records.reserve(config.generations);
  for (std::size_t t = 1; t <= config.generations; ++t) {
    series.records.push_back(run_generation(graph, config, rng, t));
  }
  series.final_graph = std::move(graph);
  return series;
}

ReplicateSet run_replicates(const SimConfig& config, int threads) {
  config.validate();
  ReplicateSet set;
  set.runs.resize(config.replicates);
  set.final_cooperation.resize(config.replicates);

  const auto count = static_cast<std::int64_t>(config.replicates);
  std::exception_ptr failure;
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      auto series = run_simulation(config, static_cast<std::size_t>(i));
      set.final_cooperation[i] = final_cooperation(series, config.record_window);
      set.runs[i] = std::move(series);
    } catch (...) {
#pragma omp critical(pggnet_replicate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  if (set.final_cooperation.size() >= 2) {
    const auto ci = aggregate_ci(set.final_cooperation);
    set.mean = ci.mean;
    set.ci95 = ci.half_width;
  } else {
    set.mean = set.final_cooperation.front();
    set.ci95 = 0.0;
  }
  return set;
}

}  // namespace pggnet
