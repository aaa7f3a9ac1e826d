#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pggnet/graph.hpp"

namespace pggnet {

struct TimeSeries;

struct AsplResult {
  double mean_path = 0.0;  // hops, over reachable ordered pairs
  std::size_t component_count = 0;
  bool connected = false;
};

struct DegreeHistogram {
  std::vector<std::size_t> counts;  // counts[k] = nodes of degree k
  std::size_t n = 0;
  double mean_degree = 0.0;

  /// counts / n, padded with zeros to `length` when it is larger.
  std::vector<double> normalized(std::size_t length = 0) const;
};

struct ConfidenceInterval {
  double mean = 0.0;
  double half_width = 0.0;
};

/// Cooperators / N. Throws PreconditionError on an empty graph.
double cooperator_fraction(const Graph& graph);

/// Mean cooperator fraction over the last `window` records.
double final_cooperation(const TimeSeries& series, std::size_t window);

DegreeHistogram degree_distribution(const Graph& graph);

AsplResult average_shortest_path(const Graph& graph);
std::size_t component_count(const Graph& graph);

/// Sample mean and 1.96 * s / sqrt(n). Needs at least two values.
ConfidenceInterval aggregate_ci(std::span<const double> values);

/// Half the L1 distance between two probability vectors (shorter one is
/// zero-padded).
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace pggnet
