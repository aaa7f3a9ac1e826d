#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pggnet/engine.hpp"

namespace pggnet {

/// A batch of runs over eta, one per base configuration.
struct SweepSpec {
  std::vector<double> eta_values;  // non-empty, strictly increasing, >= 0
  std::vector<SimConfig> bases;
  std::filesystem::path output_dir = "results";

  void validate() const;
};

/// 0.0, 0.1, ..., 1.2
std::vector<double> default_eta_grid();

/// Parses a SimConfig document. Every key is optional and defaults to the
/// standard experiment; unknown keys, wrong types and out-of-range values
/// throw ConfigError naming the dotted field path.
SimConfig parse_sim_config(const std::string& json_text);

/// Parses a SweepSpec document: `eta_values` (defaults to the standard
/// grid), exactly one of `base` (object) or `bases` (array), `output_dir`.
SweepSpec parse_sweep_spec(const std::string& json_text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace pggnet
