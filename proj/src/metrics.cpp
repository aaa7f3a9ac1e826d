#include "pggnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pggnet/engine.hpp"
#include "pggnet/errors.hpp"
#include "pggnet/kernels.hpp"

namespace pggnet {

double cooperator_fraction(const Graph& graph) {
  if (graph.empty()) throw PreconditionError("cooperator fraction of an empty graph");
  return static_cast<double>(graph.cooperator_count()) /
         static_cast<double>(graph.size());
}

double final_cooperation(const TimeSeries& series, std::size_t window) {
  const auto& records = series.records;
  if (window == 0 || window > records.size()) {
    throw PreconditionError("window " + std::to_string(window) +
                            " does not fit a series of " +
                            std::to_string(records.size()) + " records");
  }
  double sum = 0.0;
  for (auto it = records.end() - static_cast<std::ptrdiff_t>(window); it != records.end();
       ++it) {
    sum += it->cooperator_fraction;
  }
  return sum / static_cast<double>(window);
}

std::vector<double> DegreeHistogram::normalized(std::size_t length) const {
  std::vector<double> p(std::max(length, counts.size()), 0.0);
  if (n == 0) return p;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    p[k] = static_cast<double>(counts[k]) / static_cast<double>(n);
  }
  return p;
}

DegreeHistogram degree_distribution(const Graph& graph) {
  DegreeHistogram h;
  h.n = graph.size();
  h.mean_degree = graph.mean_degree();
  for (Graph::Slot s = 0; s < graph.size(); ++s) {
    const std::size_t k = graph.degree(s);
    if (k >= h.counts.size()) h.counts.resize(k + 1, 0);
    ++h.counts[k];
  }
  return h;
}

std::size_t component_count(const Graph& graph) {
  std::vector<bool> seen(graph.size(), false);
  std::vector<Graph::Slot> stack;
  std::size_t components = 0;
  for (Graph::Slot root = 0; root < graph.size(); ++root) {
    if (seen[root]) continue;
    ++components;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto v : graph.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

AsplResult average_shortest_path(const Graph& graph) {
  AsplResult result;
  const PathSums sums = kernels::all_pairs_path_sums(graph);
  if (sums.reachable_pairs > 0) {
    result.mean_path = static_cast<double>(sums.total_hops) /
                       static_cast<double>(sums.reachable_pairs);
  }
  result.component_count = component_count(graph);
  result.connected = result.component_count == 1;
  return result;
}

ConfidenceInterval aggregate_ci(std::span<const double> values) {
  if (values.size() < 2) {
    throw PreconditionError("confidence interval needs at least 2 values");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) return {*lo, 0.0};
  const auto n = static_cast<double>(values.size());
  // Rounding in the sum can push the mean a ulp outside the sample range.
  const double mean =
      std::clamp(std::accumulate(values.begin(), values.end(), 0.0) / n, *lo, *hi);
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  return {mean, 1.96 * sd / std::sqrt(n)};
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  const std::size_t len = std::max(p.size(), q.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    sum += std::abs(a - b);
  }
  return 0.5 * sum;
}

}  // namespace pggnet
