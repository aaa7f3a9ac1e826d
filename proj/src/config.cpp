#include "pggnet/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string_view>

#include "json.hpp"
#include "pggnet/errors.hpp"

namespace pggnet {

namespace {

using nlohmann::json;

std::string join(const std::string& prefix, std::string_view key) {
  return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

const json& require_object(const json& node, const std::string& path) {
  if (!node.is_object()) throw ConfigError("expected an object", path);
  return node;
}

void reject_unknown(const json& node, const std::string& path,
                    std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : node.items()) {
    bool found = false;
    for (const auto k : known) found = found || key == k;
    if (!found) throw ConfigError("unknown field", join(path, key));
  }
}

double get_real(const json& node, const std::string& path, std::string_view key,
                double fallback) {
  const auto it = node.find(std::string(key));
  if (it == node.end()) return fallback;
  if (!it->is_number()) throw ConfigError("expected a number", join(path, key));
  return it->get<double>();
}

std::uint64_t get_u64(const json& node, const std::string& path, std::string_view key,
                      std::uint64_t fallback) {
  const auto it = node.find(std::string(key));
  if (it == node.end()) return fallback;
  if (it->is_number_unsigned()) return it->get<std::uint64_t>();
  if (it->is_number_integer()) {
    throw ConfigError("expected a non-negative integer", join(path, key));
  }
  throw ConfigError("expected an integer", join(path, key));
}

bool get_bool(const json& node, const std::string& path, std::string_view key,
              bool fallback) {
  const auto it = node.find(std::string(key));
  if (it == node.end()) return fallback;
  if (!it->is_boolean()) throw ConfigError("expected true or false", join(path, key));
  return it->get<bool>();
}

std::string get_string(const json& node, const std::string& path, std::string_view key,
                       const std::string& fallback) {
  const auto it = node.find(std::string(key));
  if (it == node.end()) return fallback;
  if (!it->is_string()) throw ConfigError("expected a string", join(path, key));
  return it->get<std::string>();
}

Scenario parse_scenario(const json& node) {
  const std::string path = "scenario";
  require_object(node, path);
  const auto type = get_string(node, path, "type", "founders");
  if (type == "founders") {
    reject_unknown(node, path, {"type", "count", "strategy"});
    Founders f;
    f.count = get_u64(node, path, "count", f.count);
    const auto strategy = get_string(node, path, "strategy", "defect");
    if (strategy == "cooperate") {
      f.strategy = Strategy::Cooperate;
    } else if (strategy == "defect") {
      f.strategy = Strategy::Defect;
    } else {
      throw ConfigError("expected \"cooperate\" or \"defect\"", "scenario.strategy");
    }
    return f;
  }
  if (type == "preexisting") {
    reject_unknown(node, path, {"type", "topology"});
    const auto name = get_string(node, path, "topology", "regular");
    PreExisting p;
    if (name == "regular") {
      p.topology = Topology::Regular;
    } else if (name == "random") {
      p.topology = Topology::Random;
    } else if (name == "scale_free") {
      p.topology = Topology::ScaleFree;
    } else {
      throw ConfigError("expected regular, random or scale_free", "scenario.topology");
    }
    return p;
  }
  throw ConfigError("expected \"founders\" or \"preexisting\"", "scenario.type");
}

GameParams parse_game(const json& node) {
  const std::string path = "game";
  require_object(node, path);
  reject_unknown(node, path, {"variant", "eta", "c", "g_bar"});
  const auto name = get_string(node, path, "variant", "FCPG");
  GameVariant variant{};
  if (name == "FCPG") {
    variant = GameVariant::FCPG;
  } else if (name == "FCPI") {
    variant = GameVariant::FCPI;
  } else {
    throw ConfigError("expected \"FCPG\" or \"FCPI\"", "game.variant");
  }
  GameParams p;
  p.variant = variant;
  p.eta = get_real(node, path, "eta", 0.0);
  p.c = get_real(node, path, "c", 1.0);
  p.g_bar = get_real(node, path, "g_bar", 5.0);
  p.r = p.eta * p.g_bar;
  p.validate();
  return p;
}

DynamicsParams parse_dynamics(const json& node) {
  const std::string path = "dynamics";
  require_object(node, path);
  reject_unknown(node, path,
                 {"nodes_per_generation", "m", "max_size", "shrink_fraction",
                  "tournament_fraction", "fluctuation_enabled"});
  DynamicsParams d;
  d.nodes_per_generation =
      get_u64(node, path, "nodes_per_generation", d.nodes_per_generation);
  d.m = get_u64(node, path, "m", d.m);
  d.max_size = get_u64(node, path, "max_size", d.max_size);
  d.shrink_fraction = get_real(node, path, "shrink_fraction", d.shrink_fraction);
  d.tournament_fraction = get_real(node, path, "tournament_fraction", d.tournament_fraction);
  d.fluctuation_enabled = get_bool(node, path, "fluctuation_enabled", d.fluctuation_enabled);
  d.validate();
  return d;
}

SimConfig parse_sim_config_node(const json& node) {
  require_object(node, "config");
  reject_unknown(node, "", {"scenario", "game", "dynamics", "generations", "replicates",
                            "base_seed", "record_window"});
  SimConfig cfg;
  if (node.contains("scenario")) cfg.scenario = parse_scenario(node["scenario"]);
  if (node.contains("game")) cfg.game = parse_game(node["game"]);
  if (node.contains("dynamics")) cfg.dynamics = parse_dynamics(node["dynamics"]);
  cfg.generations = get_u64(node, "", "generations", cfg.generations);
  cfg.replicates = get_u64(node, "", "replicates", cfg.replicates);
  cfg.base_seed = get_u64(node, "", "base_seed", cfg.base_seed);
  cfg.record_window = get_u64(node, "", "record_window", cfg.record_window);
  cfg.validate();
  return cfg;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::vector<double> default_eta_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 12; ++i) grid.push_back(i / 10.0);
  return grid;
}

void SweepSpec::validate() const {
  if (eta_values.empty()) throw ConfigError("must not be empty", "eta_values");
  for (std::size_t i = 0; i < eta_values.size(); ++i) {
    if (!(eta_values[i] >= 0.0) || !std::isfinite(eta_values[i])) {
      throw ConfigError("values must be finite and >= 0", "eta_values");
    }
    if (i > 0 && !(eta_values[i] > eta_values[i - 1])) {
      throw ConfigError("values must be strictly increasing", "eta_values");
    }
  }
  if (bases.empty()) throw ConfigError("at least one base config is required", "bases");
}

SimConfig parse_sim_config(const std::string& json_text) {
  return parse_sim_config_node(parse_json(json_text));
}

SweepSpec parse_sweep_spec(const std::string& json_text) {
  const json doc = parse_json(json_text);
  require_object(doc, "sweep");
  reject_unknown(doc, "", {"eta_values", "base", "bases", "output_dir"});

  SweepSpec spec;
  if (const auto it = doc.find("eta_values"); it != doc.end()) {
    if (!it->is_array()) throw ConfigError("expected an array of numbers", "eta_values");
    for (const auto& v : *it) {
      if (!v.is_number()) throw ConfigError("expected an array of numbers", "eta_values");
      spec.eta_values.push_back(v.get<double>());
    }
  } else {
    spec.eta_values = default_eta_grid();
  }

  const bool has_base = doc.contains("base");
  const bool has_bases = doc.contains("bases");
  if (has_base == has_bases) {
    throw ConfigError("exactly one of `base` or `bases` is required", "base");
  }
  if (has_base) {
    spec.bases.push_back(parse_sim_config_node(doc["base"]));
  } else {
    const auto& list = doc["bases"];
    if (!list.is_array()) throw ConfigError("expected an array of configs", "bases");
    for (std::size_t i = 0; i < list.size(); ++i) {
      try {
        spec.bases.push_back(parse_sim_config_node(list[i]));
      } catch (const ConfigError& e) {
        const std::string where = "bases[" + std::to_string(i) + "]";
        throw ConfigError(e.message(), e.field().empty() ? where : where + "." + e.field());
      }
    }
  }
  spec.output_dir = get_string(doc, "", "output_dir", spec.output_dir.string());
  spec.validate();
  return spec;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace pggnet
