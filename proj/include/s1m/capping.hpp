#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "s1m/invariants.hpp"

namespace s1m {

/// Euler characteristic of the orbit surface, counting every boundary
/// circle (f + s + t + graph cycles): 2 - 2g - B if orientable, 2 - g - B
/// otherwise.
std::int64_t orbit_euler_characteristic(const OrbitInvariants& inv);

/// Two RP edges of one cycle sewn together by an RP^2 x I filling. The
/// cycle index and positions refer to the canonical cycle words of the
/// input graph (graph_canonical order).
struct RpPairing {
  std::size_t cycle = 0;
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const RpPairing&, const RpPairing&) = default;
};

/// A boundary circle of the capped orbit surface that came out of a corner
/// cycle.
struct NewCircle {
  enum class Origin : std::uint8_t { smoothing, rp_sewing };

  EdgeLabel kind = EdgeLabel::F;  // F or SE
  std::size_t cycle = 0;
  Origin origin = Origin::smoothing;

  friend bool operator==(const NewCircle&, const NewCircle&) = default;
};

struct CappingReport {
  OrbitInvariants input;
  OrbitInvariants output;
  std::int64_t chi_before = 0;
  std::int64_t chi_after = 0;
  std::vector<RpPairing> rp_pairings;
  std::vector<NewCircle> new_circles;
  std::vector<std::string> notes;

  friend bool operator==(const CappingReport&, const CappingReport&) = default;
};

/// Caps off every boundary component with its standard filling and returns
/// the resulting closed datum (b = 0, t = 0, empty graph).
///
/// Torus boundaries are filled by solid tori, each adding a disk to the
/// orbit surface. In each corner cycle SP edges become F and K edges become
/// SE; consecutive RP edges (in canonical word order) are paired and each
/// pair is sewn with an RP^2 x I band whose F side joins the two V^F corners
/// and whose SE side joins the two V^S corners. Tracing the result gives the
/// new F and SE circles, and the genus is recovered from the Euler
/// characteristic.
///
/// Throws std::invalid_argument for closed input, InvalidDatum for invalid
/// input and std::logic_error if the bookkeeping has no solution.
CappingReport cap_off(const OrbitInvariants& inv);

/// Re-checks a report: the output is a valid closed datum with b = 0 and
/// both Euler characteristics agree with chi_after = chi_before + t - r_p/2.
bool verify_capping(const CappingReport& report);

}  // namespace s1m
