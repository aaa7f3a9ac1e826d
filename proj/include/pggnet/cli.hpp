#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "pggnet/engine.hpp"
#include "pggnet/metrics.hpp"

namespace pggnet::cli {

struct Options {
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;  // overrides base_seed
  int threads = 0;                    // 0 = all available
  bool summary_only = false;          // sweep: skip per-run files
};

// Each command returns a process exit status and reports failures on `err`.
int cmd_run(const std::filesystem::path& config_file, const Options& options,
            std::ostream& out, std::ostream& err);
int cmd_sweep(const std::filesystem::path& sweep_file, const Options& options,
              std::ostream& out, std::ostream& err);
int cmd_netstats(const std::filesystem::path& snapshot_file, const Options& options,
                 std::ostream& out, std::ostream& err);
int cmd_generate(const std::string& topology, std::size_t n, const Options& options,
                 std::ostream& out, std::ostream& err);

// CSV writers. Every file has a header row; reals use 17 significant digits.
void write_timeseries_csv(const TimeSeries& series, std::ostream& out);
void write_histogram_csv(const DegreeHistogram& histogram, std::ostream& out);

/// Writes timeseries_<i>.csv, graph_<i>_edges.txt, graph_<i>_nodes.csv,
/// replicates.csv and summary.csv into `dir`.
void write_run_outputs(const ReplicateSet& set, const SimConfig& config,
                       const std::filesystem::path& dir, bool per_run_files = true);

}  // namespace pggnet::cli
