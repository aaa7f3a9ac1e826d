#include <algorithm>
#include <cstring>

#include "doctest.h"
#include "pggnet/engine.hpp"
#include "pggnet/errors.hpp"
#include "pggnet/generators.hpp"
#include "pggnet/metrics.hpp"

using namespace pggnet;

namespace {

SimConfig small_founders(Strategy s, double eta, bool fluctuating) {
  SimConfig cfg;
  cfg.scenario = Founders{3, s};
  cfg.game = GameParams::from_eta(GameVariant::FCPG, eta);
  cfg.dynamics.max_size = 200;
  cfg.dynamics.fluctuation_enabled = fluctuating;
  cfg.generations = 300;
  cfg.replicates = 4;
  cfg.base_seed = 7;
  return cfg;
}

bool same_records(const TimeSeries& a, const TimeSeries& b) {
  if (a.records.size() != b.records.size()) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& x = a.records[i];
    const auto& y = b.records[i];
    if (x.generation != y.generation || x.n != y.n ||
        std::memcmp(&x.cooperator_fraction, &y.cooperator_fraction, sizeof(double)) != 0 ||
        std::memcmp(&x.mean_degree, &y.mean_degree, sizeof(double)) != 0 ||
        x.changed_strategies != y.changed_strategies || x.nodes_added != y.nodes_added ||
        x.nodes_removed != y.nodes_removed) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("config validation") {
  SimConfig cfg;
  cfg.validate();
  cfg.record_window = cfg.generations + 1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  SimConfig lone;
  lone.scenario = Founders{1, Strategy::Defect};
  CHECK_THROWS_AS(lone.validate(), ConfigError);
}

TEST_CASE("defector founders cannot cooperate before the first growth") {
  const auto cfg = small_founders(Strategy::Defect, 0.9, true);
  Rng rng(1);
  Graph g = build_initial_graph(cfg, rng);
  const auto rec = run_generation(g, cfg, rng, 1);
  CHECK(rec.cooperator_fraction == 0.0);
  CHECK(rec.n == 3);
  CHECK(rec.nodes_added == 10);
  CHECK(rec.nodes_removed == 0);
  CHECK(g.size() == 13);
}

TEST_CASE("static pre-existing network never changes structure") {
  SimConfig cfg;
  cfg.scenario = PreExisting{Topology::Regular};
  cfg.dynamics.max_size = 100;
  cfg.dynamics.fluctuation_enabled = false;
  cfg.game = GameParams::from_eta(GameVariant::FCPI, 0.8);
  Rng rng(2);
  Graph g = build_initial_graph(cfg, rng);
  CHECK(g.size() == 100);
  for (std::size_t t = 1; t <= 50; ++t) {
    const auto rec = run_generation(g, cfg, rng, t);
    CHECK(rec.nodes_added == 0);
    CHECK(rec.nodes_removed == 0);
    CHECK(g.edge_count() == 200);
  }
}

TEST_CASE("fluctuating network at the cap prunes then regrows") {
  SimConfig cfg;
  cfg.scenario = PreExisting{Topology::ScaleFree};
  cfg.game = GameParams::from_eta(GameVariant::FCPG, 0.6);
  Rng rng(3);
  Graph g = build_initial_graph(cfg, rng);
  REQUIRE(g.size() == 1000);
  const auto rec = run_generation(g, cfg, rng, 1);
  CHECK(rec.n == 1000);
  CHECK(rec.nodes_removed >= 25);
  CHECK(rec.nodes_added == 10);
}

TEST_CASE("random pre-existing network starts without isolated nodes") {
  SimConfig cfg;
  cfg.scenario = PreExisting{Topology::Random};
  Rng rng(4);
  const Graph g = build_initial_graph(cfg, rng);
  CHECK(g.min_degree() >= 1);
  CHECK(g.size() < 1000);
  CHECK(g.size() > 950);
  CHECK(g.edge_count() == 2000);
}

TEST_CASE("run_simulation is deterministic and shaped") {
  const auto cfg = small_founders(Strategy::Cooperate, 0.7, true);
  const auto a = run_simulation(cfg, 2);
  const auto b = run_simulation(cfg, 2);
  CHECK(a.seed == cfg.base_seed + 2);
  CHECK(a.records.size() == cfg.generations);
  CHECK(a.initial.generation == 0);
  CHECK(a.initial.n == 3);
  for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].generation == i + 1);
  CHECK(same_records(a, b));

  const auto other = run_simulation(cfg, 3);
  CHECK_FALSE(same_records(a, other));
}

TEST_CASE("population stays within the cap and above the prune floor") {
  const auto cfg = small_founders(Strategy::Cooperate, 0.8, true);
  const auto series = run_simulation(cfg, 0);
  bool reached = false;
  for (const auto& r : series.records) {
    CHECK(r.n <= cfg.dynamics.max_size);
    const double frac_n = r.cooperator_fraction * static_cast<double>(r.n);
    CHECK(std::abs(frac_n - std::round(frac_n)) < 1e-9);
    if (reached) CHECK(r.n >= 180);
    reached = reached || r.n == cfg.dynamics.max_size;
  }
  CHECK(reached);
}

TEST_CASE("non-fluctuating founders freeze structure once at the cap") {
  const auto cfg = small_founders(Strategy::Defect, 0.5, false);
  Rng rng(5);
  Graph g = build_initial_graph(cfg, rng);
  std::size_t edges_at_cap = 0;
  for (std::size_t t = 1; t <= 100; ++t) {
    run_generation(g, cfg, rng, t);
    if (g.size() == cfg.dynamics.max_size) {
      if (edges_at_cap == 0) edges_at_cap = g.edge_count();
      CHECK(g.edge_count() == edges_at_cap);
    }
  }
  CHECK(edges_at_cap > 0);
}

TEST_CASE("replicate sets do not depend on the thread count") {
  const auto cfg = small_founders(Strategy::Defect, 1.0, true);
  const auto one = run_replicates(cfg, 1);
  const auto four = run_replicates(cfg, 4);
  REQUIRE(one.final_cooperation.size() == 4);
  CHECK(one.final_cooperation == four.final_cooperation);
  CHECK(one.mean == four.mean);
  CHECK(one.ci95 == four.ci95);
  for (std::size_t i = 0; i < 4; ++i) CHECK(same_records(one.runs[i], four.runs[i]));
  const auto [lo, hi] = std::minmax_element(one.final_cooperation.begin(),
                                            one.final_cooperation.end());
  CHECK(one.mean >= *lo);
  CHECK(one.mean <= *hi);
}

TEST_CASE("cooperator founders at eta = 1 end mostly cooperative") {
  auto cfg = small_founders(Strategy::Cooperate, 1.0, true);
  cfg.generations = 600;
  const auto set = run_replicates(cfg);
  CHECK(set.mean > 0.8);
}

TEST_CASE("defector founders at eta = 0.2 end with no cooperation") {
  for (const auto variant : {GameVariant::FCPG, GameVariant::FCPI}) {
    auto cfg = small_founders(Strategy::Defect, 0.2, true);
    cfg.game = GameParams::from_eta(variant, 0.2);
    const auto set = run_replicates(cfg);
    CHECK(set.mean < 0.05);
  }
}
