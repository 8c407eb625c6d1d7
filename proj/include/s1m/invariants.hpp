#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "s1m/graph.hpp"

namespace s1m {

/// Orientability of the orbit surface: 'o' or 'n' in the text notation.
enum class Orientability : std::uint8_t { orientable, nonorientable };

char to_char(Orientability eps);

/// Seifert invariants (m, n) of one exceptional orbit with stabilizer Z_m.
struct SeifertPair {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
  friend auto operator<=>(const SeifertPair&, const SeifertPair&) = default;
};

/// Full classification datum {b; (eps, g, f, s, t); pairs; graph} of a
/// compact 3-manifold with an effective circle action.
///
/// f and s count fixed and special-exceptional circles away from the
/// boundary, t counts torus boundary components, and graph records every
/// component that meets a sphere, Klein-bottle or projective-plane boundary.
/// Seifert pairs form an unordered multiset. Counts are plain integers so
/// that out-of-range input can be represented and reported by validate().
struct OrbitInvariants {
  std::int64_t b = 0;
  Orientability eps = Orientability::orientable;
  std::int64_t g = 0;
  std::int64_t f = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::vector<SeifertPair> pairs;
  CycleGraph graph;

  /// No torus boundary and no corner graph.
  bool closed() const { return t == 0 && graph.empty(); }
  /// Closed with neither fixed circles nor special-exceptional circles.
  bool closed_free() const { return closed() && f == 0 && s == 0; }

  friend bool operator==(const OrbitInvariants&, const OrbitInvariants&) = default;
};

enum class Condition : std::uint8_t {
  structure,           // negative counts or malformed pairs
  principal_euler,     // condition (1) on b
  seifert_pairs,       // condition (2)
  corner_graph,        // condition (3)
  parity,              // even RP count per cycle
  nonorientable_genus  // eps = n needs g >= 1
};

/// "(1)", "(2)", "(3)", "parity", "nonorientable-genus" or "structure".
std::string_view to_string(Condition condition);

struct Violation {
  Condition condition;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(Condition c) const;
};

/// Thrown by operations whose precondition is a valid datum.
class InvalidDatum : public std::invalid_argument {
 public:
  explicit InvalidDatum(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks every classification condition and returns all violations.
ValidationReport validate(const OrbitInvariants& inv);

/// Reduces n to min(n, m - n) when eps = n, and b modulo 2 (or to 0 when
/// some m = 2) for nonorientable closed data without F/SE circles.
/// Throws InvalidDatum if violations remain afterwards.
OrbitInvariants normalize(const OrbitInvariants& inv);

struct DerivedCounts {
  std::int64_t f0_minus_f = 0;  // F edges
  std::int64_t s0_minus_s = 0;  // SE edges
  std::int64_t s_p = 0;
  std::int64_t k = 0;
  std::int64_t r_p = 0;
  std::int64_t v_f = 0;  // corners touching an F edge
  std::int64_t v_s = 0;  // corners touching an SE edge
  std::int64_t boundary_circles = 0;
  std::vector<std::int64_t> rp_per_cycle;
};

/// Edge and corner counts of the graph. Corners are counted from adjacency,
/// independently of the edge tallies, so the parity identities are checks.
DerivedCounts derived_counts(const OrbitInvariants& inv);

/// True when v_f = 2(f0-f) = 2 s_p + r_p, v_s = 2(s0-s) = 2k + r_p and
/// every cycle carries an even number of RP edges.
bool parity_identities_hold(const DerivedCounts& counts);

struct CanonicalForm {
  std::int64_t b = 0;
  Orientability eps = Orientability::orientable;
  std::int64_t g = 0;
  std::int64_t f = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::vector<SeifertPair> pairs;
  std::vector<CycleWord> graph_canon;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  std::size_t hash() const;
};

/// Normalizes, then sorts pairs and canonicalizes cycles.
/// Throws InvalidDatum on invalid input.
CanonicalForm canonical_form(const OrbitInvariants& inv);

/// Equivariant diffeomorphism test via canonical forms.
bool equivalent(const OrbitInvariants& a, const OrbitInvariants& b);

/// The seven compact surfaces carrying an effective circle action.
enum class Surface2d : std::uint8_t {
  disk,
  cylinder,
  mobius_band,
  sphere,
  projective_plane,
  torus,
  klein_bottle
};

std::string_view to_string(Surface2d surface);

/// Identifies a surface from (boundary circles, fixed points, special
/// exceptional orbits). std::nullopt means no such surface exists.
std::optional<Surface2d> classify_2d(std::int64_t boundary, std::int64_t f, std::int64_t s);

}  // namespace s1m

template <>
struct std::hash<s1m::CanonicalForm> {
  std::size_t operator()(const s1m::CanonicalForm& form) const noexcept { return form.hash(); }
};
