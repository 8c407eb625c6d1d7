#include "s1m/graph.hpp"

#include <algorithm>

namespace s1m {

std::string_view to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::F: return "F";
    case EdgeLabel::SE: return "SE";
    case EdgeLabel::SP: return "SP";
    case EdgeLabel::K: return "K";
    case EdgeLabel::RP: return "RP";
  }
  return "?";
}

std::optional<EdgeLabel> label_from_string(std::string_view text) {
  for (EdgeLabel label : kAllLabels) {
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

namespace {

// Labels allowed on either side of an edge of the given type.
bool neighbor_allowed(EdgeLabel edge, EdgeLabel neighbor) {
  switch (edge) {
    case EdgeLabel::F: return neighbor == EdgeLabel::SP || neighbor == EdgeLabel::RP;
    case EdgeLabel::SE: return neighbor == EdgeLabel::K || neighbor == EdgeLabel::RP;
    case EdgeLabel::SP: return neighbor == EdgeLabel::F;
    case EdgeLabel::K: return neighbor == EdgeLabel::SE;
    case EdgeLabel::RP: return is_interior(neighbor);
  }
  return false;
}

std::string describe(EdgeLabel edge) {
  switch (edge) {
    case EdgeLabel::F: return "F edge must neighbor SP or RP";
    case EdgeLabel::SE: return "SE edge must neighbor K or RP";
    case EdgeLabel::SP: return "SP edge must have F on both sides";
    case EdgeLabel::K: return "K edge must have SE on both sides";
    case EdgeLabel::RP: return "RP edge must join one F and one SE";
  }
  return {};
}

}  // namespace

GraphReport validate_graph(const CycleGraph& graph) {
  GraphReport report;
  for (std::size_t c = 0; c < graph.cycles.size(); ++c) {
    const Cycle& cycle = graph.cycles[c];
    const std::size_t n = cycle.size();
    if (n < 2) {
      report.violations.push_back({c, 0, "cycle must have at least two edges"});
      continue;
    }
    if (n % 2 != 0) {
      report.violations.push_back({c, 0, "cycle length must be even"});
    }
    for (std::size_t i = 0; i < n; ++i) {
      const EdgeLabel edge = cycle[i];
      const EdgeLabel prev = cycle[(i + n - 1) % n];
      const EdgeLabel next = cycle[(i + 1) % n];
      bool ok = neighbor_allowed(edge, prev) && neighbor_allowed(edge, next);
      if (ok && edge == EdgeLabel::RP) ok = prev != next;
      if (!ok) {
        report.violations.push_back(
            {c, i, describe(edge) + " (found " + std::string(to_string(prev)) + " and " +
                       std::string(to_string(next)) + ")"});
      }
    }
  }
  return report;
}

CycleWord canonicalize_cycle(const Cycle& cycle) {
  const std::size_t n = cycle.size();
  if (n == 0) return {};
  std::vector<EdgeLabel> best = cycle;
  std::vector<EdgeLabel> candidate(n);
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t i = 0; i < n; ++i) candidate[i] = cycle[(start + i) % n];
    if (candidate < best) best = candidate;
    for (std::size_t i = 0; i < n; ++i) candidate[i] = cycle[(start + n - i) % n];
    if (candidate < best) best = candidate;
  }
  return {std::move(best)};
}

std::vector<CycleWord> graph_canonical(const CycleGraph& graph) {
  std::vector<CycleWord> words;
  words.reserve(graph.cycles.size());
  for (const Cycle& c : graph.cycles) words.push_back(canonicalize_cycle(c));
  std::sort(words.begin(), words.end());
  return words;
}

bool graphs_isomorphic(const CycleGraph& a, const CycleGraph& b) {
  return graph_canonical(a) == graph_canonical(b);
}

std::string to_string(const Cycle& cycle) {
  std::string out = "<";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(cycle[i]);
  }
  return out + ">";
}

std::size_t count_label(const Cycle& cycle, EdgeLabel label) {
  return static_cast<std::size_t>(std::count(cycle.begin(), cycle.end(), label));
}

std::size_t count_label(const CycleGraph& graph, EdgeLabel label) {
  std::size_t total = 0;
  for (const Cycle& c : graph.cycles) total += count_label(c, label);
  return total;
}

}  // namespace s1m
