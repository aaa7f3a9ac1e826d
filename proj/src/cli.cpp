#include "pggnet/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pggnet/config.hpp"
#include "pggnet/errors.hpp"
#include "pggnet/generators.hpp"
#include "pggnet/snapshot.hpp"

namespace pggnet::cli {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  return file;
}

void finish(std::ofstream& file, const fs::path& path) {
  file.flush();
  if (!file) throw std::runtime_error("I/O error writing " + path.string());
}

template <class Writer>
void write_file(const fs::path& path, Writer&& writer) {
  auto file = open_output(path);
  writer(file);
  finish(file, path);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

std::string short_real(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", v);
  return buffer;
}

std::string fluctuation_label(const SimConfig& cfg) {
  return cfg.dynamics.fluctuation_enabled ? "fluctuating" : "static";
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace

void write_timeseries_csv(const TimeSeries& series, std::ostream& out) {
  out << "generation,N,cooperator_fraction,mean_degree,changed_strategies,nodes_added,"
         "nodes_removed\n";
  auto row = [&](const GenerationRecord& r) {
    out << r.generation << ',' << r.n << ',' << format_double(r.cooperator_fraction) << ','
        << format_double(r.mean_degree) << ',' << r.changed_strategies << ','
        << r.nodes_added << ',' << r.nodes_removed << '\n';
  };
  row(series.initial);
  for (const auto& r : series.records) row(r);
}

void write_histogram_csv(const DegreeHistogram& histogram, std::ostream& out) {
  out << "k,count\n";
  for (std::size_t k = 0; k < histogram.counts.size(); ++k) {
    if (histogram.counts[k] > 0) out << k << ',' << histogram.counts[k] << '\n';
  }
}

void write_run_outputs(const ReplicateSet& set, const SimConfig& config,
                       const fs::path& dir, bool per_run_files) {
  ensure_dir(dir);
  if (per_run_files) {
    for (std::size_t i = 0; i < set.runs.size(); ++i) {
      const auto& run = set.runs[i];
      const auto tag = std::to_string(i);
      write_file(dir / ("timeseries_" + tag + ".csv"),
                 [&](std::ostream& o) { write_timeseries_csv(run, o); });
      write_file(dir / ("graph_" + tag + "_edges.txt"),
                 [&](std::ostream& o) { write_edge_list(run.final_graph, o); });
      write_file(dir / ("graph_" + tag + "_nodes.csv"),
                 [&](std::ostream& o) { write_node_table(run.final_graph, o); });
    }
  }
  write_file(dir / "replicates.csv", [&](std::ostream& o) {
    o << "replicate,seed,final_cooperation,N,E,mean_degree,mean_path,component_count,"
         "connected\n";
    for (std::size_t i = 0; i < set.runs.size(); ++i) {
      const auto& g = set.runs[i].final_graph;
      const auto aspl = average_shortest_path(g);
      o << i << ',' << set.runs[i].seed << ',' << format_double(set.final_cooperation[i])
        << ',' << g.size() << ',' << g.edge_count() << ',' << format_double(g.mean_degree())
        << ',' << format_double(aspl.mean_path) << ',' << aspl.component_count << ','
        << (aspl.connected ? "true" : "false") << '\n';
    }
  });
  write_file(dir / "summary.csv", [&](std::ostream& o) {
    o << "scenario,variant,eta,mean_coop,ci95\n";
    o << scenario_label(config.scenario) << ',' << to_string(config.game.variant) << ','
      << format_double(config.game.eta) << ',' << format_double(set.mean) << ','
      << format_double(set.ci95) << '\n';
  });
}

int cmd_run(const fs::path& config_file, const Options& options, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    SimConfig config = parse_sim_config(read_text_file(config_file));
    if (options.seed) config.base_seed = *options.seed;
    const fs::path dir = options.out.value_or("results");
    ensure_dir(dir);
    const auto set = run_replicates(config, options.threads);
    write_run_outputs(set, config, dir);
    out << scenario_label(config.scenario) << ' ' << to_string(config.game.variant)
        << " eta=" << short_real(config.game.eta) << " mean_coop=" << format_double(set.mean)
        << " ci95=" << format_double(set.ci95) << '\n';
    return 0;
  });
}

int cmd_sweep(const fs::path& sweep_file, const Options& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    SweepSpec spec = parse_sweep_spec(read_text_file(sweep_file));
    if (options.out) spec.output_dir = *options.out;
    ensure_dir(spec.output_dir);

    const fs::path sweep_csv = spec.output_dir / "sweep.csv";
    auto csv = open_output(sweep_csv);
    csv << "eta,variant,scenario,topology,fluctuation,mean_coop,ci95,n_replicates\n";

    for (SimConfig base : spec.bases) {
      if (options.seed) base.base_seed = *options.seed;
      const std::string label = scenario_label(base.scenario) + "_" +
                                topology_label(base.scenario) + "_" +
                                to_string(base.game.variant) + "_" + fluctuation_label(base);
      for (const double eta : spec.eta_values) {
        SimConfig cfg = base;
        cfg.game = GameParams::from_eta(base.game.variant, eta, base.game.c, base.game.g_bar);
        const auto set = run_replicates(cfg, options.threads);
        write_run_outputs(set, cfg, spec.output_dir / label / ("eta_" + short_real(eta)),
                          !options.summary_only);
        csv << format_double(eta) << ',' << to_string(cfg.game.variant) << ','
            << scenario_label(cfg.scenario) << ',' << topology_label(cfg.scenario) << ','
            << fluctuation_label(cfg) << ',' << format_double(set.mean) << ','
            << format_double(set.ci95) << ',' << set.final_cooperation.size() << '\n';
        out << label << " eta=" << short_real(eta) << " mean_coop=" << format_double(set.mean)
            << '\n';
      }
    }
    finish(csv, sweep_csv);
    return 0;
  });
}

int cmd_netstats(const fs::path& snapshot_file, const Options& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(snapshot_file);
    if (!in) throw std::runtime_error("cannot open " + snapshot_file.string());
    const Graph graph = read_edge_list(in);
    const auto histogram = degree_distribution(graph);
    const auto aspl = average_shortest_path(graph);

    const fs::path dir = options.out.value_or(".");
    ensure_dir(dir);
    const auto stem = snapshot_file.stem().string();
    write_file(dir / (stem + "_degree_histogram.csv"),
               [&](std::ostream& o) { write_histogram_csv(histogram, o); });

    const std::string header = "N,E,mean_degree,mean_path,component_count,connected\n";
    std::ostringstream line;
    line << graph.size() << ',' << graph.edge_count() << ','
         << format_double(histogram.mean_degree) << ',' << format_double(aspl.mean_path)
         << ',' << aspl.component_count << ',' << (aspl.connected ? "true" : "false") << '\n';
    write_file(dir / (stem + "_netstats.csv"),
               [&](std::ostream& o) { o << header << line.str(); });
    out << header << line.str();
    return 0;
  });
}

int cmd_generate(const std::string& topology, std::size_t n, const Options& options,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Rng rng(options.seed.value_or(0));
    Graph graph;
    if (topology == "regular") {
      graph = gen_ring_lattice(n, 4);
    } else if (topology == "random") {
      graph = gen_er_random(n, 2 * n, rng);
    } else if (topology == "scale_free") {
      graph = gen_barabasi_albert(n, 2, rng);
    } else {
      throw ConfigError("expected regular, random or scale_free", "topology");
    }
    const fs::path dir = options.out.value_or(".");
    ensure_dir(dir);
    const fs::path path = dir / (topology + "_edges.txt");
    write_file(path, [&](std::ostream& o) { write_edge_list(graph, o); });
    out << path.string() << '\n';
    return 0;
  });
}

}  // namespace pggnet::cli
