#include "pggnet/snapshot.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "pggnet/errors.hpp"

namespace pggnet {

std::string format_double(double value) {
  char buffer[32];
  const int len = std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return std::string(buffer, static_cast<std::size_t>(len));
}

void write_edge_list(const Graph& graph, std::ostream& out) {
  for (Graph::Slot s = 0; s < graph.size(); ++s) {
    const auto u = raw(graph.id_at(s));
    for (const Graph::Slot v : graph.neighbors(s)) {
      const auto w = raw(graph.id_at(v));
      if (u < w) out << u << ' ' << w << '\n';
    }
  }
}

void write_node_table(const Graph& graph, std::ostream& out) {
  out << "id,strategy,fitness\n";
  for (Graph::Slot s = 0; s < graph.size(); ++s) {
    out << raw(graph.id_at(s)) << ',' << (cooperates(graph.strategy(s)) ? 'C' : 'D')
        << ',' << format_double(graph.fitness(s)) << '\n';
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_u64(std::string_view token, std::uint64_t& value) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  Graph graph;
  std::unordered_map<std::uint64_t, NodeId> remap;
  auto node_for = [&](std::uint64_t label) {
    auto it = remap.find(label);
    if (it == remap.end()) {
      it = remap.emplace(label, graph.add_isolated_node(Strategy::Defect)).first;
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto split = text.find_first_of(" \t");
    if (split == std::string_view::npos) {
      throw ParseError(line_no, "expected two node ids, got '" + std::string(text) + "'");
    }
    const auto first = text.substr(0, split);
    const auto second = trim(text.substr(split));
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_u64(first, u) || !parse_u64(second, v)) {
      throw ParseError(line_no, "expected two non-negative integers, got '" +
                                    std::string(text) + "'");
    }
    if (u == v) throw ParseError(line_no, "self-edge on node " + std::to_string(u));
    const NodeId a = node_for(u);
    const NodeId b = node_for(v);
    if (graph.has_edge(a, b)) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    }
    graph.add_edge(a, b);
  }
  return graph;
}

}  // namespace pggnet
