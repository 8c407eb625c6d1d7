#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace s1m {

/// Edge types of the corner graph of an orbit space.
///
/// F and SE are interior-type edges (a fixed interval, a special-exceptional
/// interval). SP, K and RP are boundary-type edges: orbit spaces of sphere,
/// Klein-bottle and projective-plane boundary components. The enumerator
/// order is the global label order used by canonical cycle words.
enum class EdgeLabel : std::uint8_t { F, SE, SP, K, RP };

inline constexpr EdgeLabel kAllLabels[] = {EdgeLabel::F, EdgeLabel::SE, EdgeLabel::SP, EdgeLabel::K,
                                           EdgeLabel::RP};

std::string_view to_string(EdgeLabel label);
std::optional<EdgeLabel> label_from_string(std::string_view text);

constexpr bool is_interior(EdgeLabel label) { return label == EdgeLabel::F || label == EdgeLabel::SE; }
constexpr bool is_boundary(EdgeLabel label) { return !is_interior(label); }

/// A closed walk of edges; edge i and edge i+1 (cyclically) share a corner.
using Cycle = std::vector<EdgeLabel>;

/// Disjoint union of labelled cycles. Corner vertices are not stored; the
/// corner between two edges is a V^F vertex when one of them is F and a V^S
/// vertex when one of them is SE.
struct CycleGraph {
  std::vector<Cycle> cycles;

  bool empty() const { return cycles.empty(); }
  friend bool operator==(const CycleGraph&, const CycleGraph&) = default;
};

/// Canonical representative of a cycle up to rotation and reflection.
struct CycleWord {
  std::vector<EdgeLabel> labels;

  friend bool operator==(const CycleWord&, const CycleWord&) = default;
  friend auto operator<=>(const CycleWord&, const CycleWord&) = default;
};

struct GraphViolation {
  std::size_t cycle = 0;
  std::size_t position = 0;
  std::string message;
};

struct GraphReport {
  std::vector<GraphViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the corner-adjacency rules on every edge of every cycle.
GraphReport validate_graph(const CycleGraph& graph);

/// Lexicographically least word over all rotations and both directions.
CycleWord canonicalize_cycle(const Cycle& cycle);

/// Sorted multiset of canonical cycle words.
std::vector<CycleWord> graph_canonical(const CycleGraph& graph);

bool graphs_isomorphic(const CycleGraph& a, const CycleGraph& b);

/// "<F,SP>" style rendering.
std::string to_string(const Cycle& cycle);

/// Number of occurrences of a label across all cycles.
std::size_t count_label(const CycleGraph& graph, EdgeLabel label);

/// Number of RP edges in a single cycle.
std::size_t count_label(const Cycle& cycle, EdgeLabel label);

}  // namespace s1m
