#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pggnet/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Public goods games on randomly growing, fluctuating networks"};
  app.require_subcommand(1);

  pggnet::cli::Options options;
  std::string out_dir;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_dir, "Output directory");
    cmd->add_option("--seed", seed, "Override the base seed");
    cmd->add_option("--threads", options.threads, "Replicate threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
  };

  std::string config_file;
  auto* run = app.add_subcommand("run", "Run all replicates of one configuration");
  run->add_option("config", config_file, "Config JSON")->required()->check(CLI::ExistingFile);
  add_common(run);

  std::string sweep_file;
  auto* sweep = app.add_subcommand("sweep", "Run a configuration over a grid of eta");
  sweep->add_option("sweep", sweep_file, "Sweep JSON")->required()->check(CLI::ExistingFile);
  sweep->add_flag("--summary-only", options.summary_only,
                  "Write sweep.csv and per-eta summaries only");
  add_common(sweep);

  std::string snapshot_file;
  auto* netstats = app.add_subcommand("netstats", "Degree histogram and path lengths");
  netstats->add_option("edges", snapshot_file, "Edge-list snapshot")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(netstats);

  std::string topology;
  std::size_t n = 1000;
  auto* generate = app.add_subcommand("generate", "Write a ring, ER or BA snapshot");
  generate->add_option("topology", topology, "regular | random | scale_free")->required();
  generate->add_option("-n,--nodes", n, "Node count");
  add_common(generate);

  CLI11_PARSE(app, argc, argv);

  if (!out_dir.empty()) options.out = out_dir;
  for (const auto* cmd : {run, sweep, netstats, generate}) {
    if (cmd->parsed() && cmd->count("--seed") > 0) options.seed = seed;
  }

  namespace cli = pggnet::cli;
  if (run->parsed()) return cli::cmd_run(config_file, options, std::cout, std::cerr);
  if (sweep->parsed()) return cli::cmd_sweep(sweep_file, options, std::cout, std::cerr);
  if (netstats->parsed()) {
    return cli::cmd_netstats(snapshot_file, options, std::cout, std::cerr);
  }
  return cli::cmd_generate(topology, n, options, std::cout, std::cerr);
}
